// simplices, complexes, chains, filtrations, sparse matrices
#include <doctest.h>

#include "helpers.hpp"

#include <wrapser/matrix.hpp>

using namespace wrapser;
using testutil::Rng;

namespace {

SimplicialComplex triangle_closure() {
    return SimplicialComplex::closure_of({Simplex({0, 1, 2})});
}

SimplicialComplex hollow_triangle() {
    return SimplicialComplex::closure_of({Simplex({0, 1}), Simplex({0, 2}), Simplex({1, 2})});
}

}  // namespace

TEST_SUITE_BEGIN("core");

TEST_CASE("simplex constructor sorts and deduplicates") {
    Simplex s({2, 0, 1, 1});
    CHECK(s.vertices() == std::vector<vertex_t>{0, 1, 2});
    CHECK(s.dimension() == 2);
    CHECK(Simplex({5}).dimension() == 0);
}

TEST_CASE("simplex faces and facet enumeration") {
    Simplex t({0, 1, 2});
    CHECK(Simplex({0}).is_face_of(t));
    CHECK(Simplex({0, 2}).is_face_of(t));
    CHECK(t.is_face_of(t));
    CHECK_FALSE(Simplex({0, 3}).is_face_of(t));

    auto facets = t.facet_simplices();
    REQUIRE(facets.size() == 3);
    // position k drops vertices()[k]
    CHECK(facets[0] == Simplex({1, 2}));
    CHECK(facets[1] == Simplex({0, 2}));
    CHECK(facets[2] == Simplex({0, 1}));

    CHECK(Simplex::union_of(Simplex({0, 1}), Simplex({1, 2})) == Simplex({0, 1, 2}));
    CHECK(Simplex::intersection(Simplex({0, 1, 2}), Simplex({1, 2, 3})) == Simplex({1, 2}));
    CHECK(t.with_vertex(3) == Simplex({0, 1, 2, 3}));
    CHECK(t.without_vertex(1) == Simplex({0, 2}));
}

TEST_CASE("simplex order is dimension first, then lexicographic") {
    CHECK(Simplex({5}) < Simplex({0, 1}));
    CHECK(Simplex({0, 2}) < Simplex({1, 2}));
    CHECK(Simplex({0, 1}) < Simplex({0, 2}));
    CHECK_FALSE(Simplex({1, 2}) < Simplex({1, 2}));
}

TEST_CASE("boundary faces alternate signs") {
    auto b = boundary_faces(Simplex({0, 1, 2}));
    REQUIRE(b.size() == 3);
    CHECK(b[0] == std::pair<Simplex, int>{Simplex({1, 2}), 1});
    CHECK(b[1] == std::pair<Simplex, int>{Simplex({0, 2}), -1});
    CHECK(b[2] == std::pair<Simplex, int>{Simplex({0, 1}), 1});
    CHECK(boundary_faces(Simplex({7})).empty());
}

TEST_CASE("closure assigns ids in (dimension, lex) order") {
    SimplicialComplex K = triangle_closure();
    REQUIRE(K.size() == 7);
    CHECK(K.dimension() == 2);
    std::vector<Simplex> expect = {Simplex({0}),    Simplex({1}),    Simplex({2}),
                                   Simplex({0, 1}), Simplex({0, 2}), Simplex({1, 2}),
                                   Simplex({0, 1, 2})};
    for (index_t id = 0; id < K.size(); ++id) CHECK(K.simplex(id) == expect[static_cast<std::size_t>(id)]);
    CHECK(K.id_of(Simplex({0, 2})) == 4);
    CHECK_FALSE(K.id_of(Simplex({0, 3})).has_value());
}

TEST_CASE("facet and cofacet links are mutually consistent") {
    Rng rng(11);
    for (int t = 0; t < 10; ++t) {
        SimplicialComplex K = testutil::random_complex(rng, 7, 6, 3);
        for (index_t id = 0; id < K.size(); ++id) {
            for (index_t f : K.facets(id)) {
                CHECK(K.simplex(f).is_face_of(K.simplex(id)));
                CHECK(K.simplex(f).dimension() == K.simplex(id).dimension() - 1);
                auto cofs = K.cofacets(f);
                CHECK(std::find(cofs.begin(), cofs.end(), id) != cofs.end());
            }
            for (index_t c : K.cofacets(id)) {
                auto fs = K.facets(c);
                CHECK(std::find(fs.begin(), fs.end(), id) != fs.end());
            }
        }
    }
}

TEST_CASE("from_closed_set rejects sets that are not face-closed") {
    CHECK_THROWS_AS(SimplicialComplex::from_closed_set({Simplex({0, 1})}), DataError);
    CHECK_NOTHROW(SimplicialComplex::from_closed_set(
        {Simplex({0}), Simplex({1}), Simplex({0, 1})}));
}

TEST_CASE("chain constructor normalizes entries") {
    Chain c(1, {{4, 1}, {2, 1}, {7, 0}});
    CHECK(c.support() == std::vector<index_t>{2, 4});
    CHECK(c.coefficient(7) == 0);
    CHECK(c.coefficient(4) == 1);
    CHECK_THROWS_AS(Chain(1, {{3, 1}, {3, 2}}), std::invalid_argument);
    CHECK(Chain(0).is_zero());
}

TEST_CASE("add_scaled merges sorted entries over the field") {
    PrimeField F3(3);
    Chain a(1, {{0, 1}, {2, 2}});
    Chain b(1, {{1, 1}, {2, 2}});
    a.add_scaled(b, 2, F3);  // a + 2b
    CHECK(a.coefficient(0) == 1);
    CHECK(a.coefficient(1) == 2);
    CHECK(a.coefficient(2) == 0);  // 2 + 4 = 6 = 0 mod 3
    CHECK(a.support() == std::vector<index_t>{0, 1});
}

TEST_CASE("chain pivot and cancellation") {
    PrimeField F5(5);
    Chain a(1, {{1, 2}, {6, 3}});
    Chain b(1, {{2, 1}, {6, 4}});
    CHECK(chain_pivot(a) == 6);
    CHECK_FALSE(chain_pivot(Chain(1)).has_value());
    // cancel the shared pivot: a += mu * b with mu = -a_6 / b_6
    coeff_t mu = F5.mul(F5.neg(3), F5.inv(4));
    a.add_scaled(b, mu, F5);
    REQUIRE(chain_pivot(a).has_value());
    CHECK(*chain_pivot(a) < 6);
}

TEST_CASE("lexicographic chain comparison follows the support rule") {
    auto c = [](std::vector<ChainEntry> e) { return Chain(1, std::move(e)); };
    CHECK(lex_compare_chains(c({}), c({{0, 1}})) == LexOrdering::less);
    CHECK(lex_compare_chains(c({{0, 1}}), c({{1, 1}})) == LexOrdering::less);
    CHECK(lex_compare_chains(c({{1, 1}}), c({{0, 1}, {1, 1}})) == LexOrdering::less);
    CHECK(lex_compare_chains(c({{0, 1}, {1, 1}}), c({{1, 1}})) == LexOrdering::greater);
    // equal support, different coefficients: the preorder cannot separate them
    CHECK(lex_compare_chains(c({{2, 1}}), c({{2, 2}})) == LexOrdering::equal_support);
    CHECK_THROWS_AS(lex_compare_chains(Chain(0), Chain(1)), std::invalid_argument);
}

TEST_CASE("over Z/2 the support preorder is a total order") {
    Rng rng(5);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int t = 0; t < 200; ++t) {
        std::vector<ChainEntry> ea, eb;
        for (index_t i = 0; i < 12; ++i) {
            if (bit(rng)) ea.push_back({i, 1});
            if (bit(rng)) eb.push_back({i, 1});
        }
        Chain a(1, ea), b(1, eb);
        LexOrdering ab = lex_compare_chains(a, b), ba = lex_compare_chains(b, a);
        if (ab == LexOrdering::equal_support) {
            CHECK(a == b);  // antisymmetry: equal support means equal chain mod 2
            CHECK(ba == LexOrdering::equal_support);
        } else {
            CHECK(ab != ba);
        }
    }
}

TEST_CASE("filtration of a constant function is the (dim, lex) order") {
    auto K = std::make_shared<SimplicialComplex>(triangle_closure());
    auto filt = elementwise_filtration(K, [](const Simplex&) { return FiltValue(0); });
    REQUIRE(filt.size() == 7);
    for (index_t pos = 0; pos < filt.size(); ++pos) CHECK(filt.id_at(pos) == pos);
    CHECK(filt.simplex_at(6) == Simplex({0, 1, 2}));
    CHECK(filt.degree_at(6) == 2);
}

TEST_CASE("a late edge value pushes the edge to the end") {
    auto K = std::make_shared<SimplicialComplex>(hollow_triangle());
    auto filt = elementwise_filtration(K, [](const Simplex& s) {
        return s == Simplex({1, 2}) ? FiltValue(5) : FiltValue(0);
    });
    CHECK(filt.simplex_at(filt.size() - 1) == Simplex({1, 2}));
    CHECK(filt.value_at(filt.size() - 1) == FiltValue(5));
    CHECK(filt.sublevel_size(FiltValue(0)) == 5);
    CHECK(filt.sublevel_size(FiltValue(5)) == 6);
    CHECK(filt.strict_sublevel_size(FiltValue(5)) == 5);
}

TEST_CASE("non-monotone values are rejected with a facet witness") {
    auto K = std::make_shared<SimplicialComplex>(
        SimplicialComplex::closure_of({Simplex({0, 1})}));
    CHECK_THROWS_AS(elementwise_filtration(K,
                                           [](const Simplex& s) {
                                               if (s == Simplex({0})) return FiltValue(1);
                                               return FiltValue(0);
                                           }),
                    DataError);
}

TEST_CASE("every filtration prefix is a subcomplex") {
    Rng rng(17);
    for (int t = 0; t < 12; ++t) {
        auto K = std::make_shared<SimplicialComplex>(testutil::random_complex(rng, 8, 10, 3));
        if (K->size() > 200) continue;
        auto values = testutil::random_injective_values(rng, *K);
        auto filt = elementwise_filtration(
            K, [&](const Simplex& s) { return values[static_cast<std::size_t>(*K->id_of(s))]; });
        for (index_t pos = 0; pos < filt.size(); ++pos) {
            CHECK(filt.value_at(pos) >= (pos ? filt.value_at(pos - 1) : FiltValue(0)));
            for (index_t f : K->facets(filt.id_at(pos)))
                CHECK(filt.position_of_id(f) < pos);
        }
    }
}

TEST_CASE("boundary of boundary vanishes over Z/2, Z/3, Z/5") {
    Rng rng(23);
    for (coeff_t p : {2u, 3u, 5u}) {
        PrimeField F(p);
        for (int t = 0; t < 6; ++t) {
            auto K = std::make_shared<SimplicialComplex>(testutil::random_complex(rng, 8, 8, 3));
            auto filt = elementwise_filtration(K, [](const Simplex&) { return FiltValue(0); });
            SparseColumnMatrix D = boundary_matrix(filt, F);
            for (index_t j = 0; j < D.columns(); ++j) {
                const Chain& col = D.column(j);
                if (col.is_zero()) continue;
                CHECK(D.apply(col, F, col.degree() - 1).is_zero());
            }
        }
    }
}

TEST_CASE("boundary matrix of the triangle over Z/3 carries the signs") {
    auto K = std::make_shared<SimplicialComplex>(triangle_closure());
    PrimeField F3(3);
    auto filt = elementwise_filtration(K, [](const Simplex&) { return FiltValue(0); });
    SparseColumnMatrix D = boundary_matrix(filt, F3);
    CHECK(D.is_strictly_upper_triangular());
    CHECK(D.column(0).is_zero());
    // triangle at position 6; edges {0,1},{0,2},{1,2} at positions 3,4,5
    CHECK(D.entry(5, 6) == 1);
    CHECK(D.entry(4, 6) == 2);  // -1 mod 3
    CHECK(D.entry(3, 6) == 1);
    // an edge column in dim 0: d{0,1} = {1} - {0}
    CHECK(D.entry(1, 3) == 1);
    CHECK(D.entry(0, 3) == 2);
}

TEST_CASE("upper triangular inverse over random fields") {
    Rng rng(31);
    for (coeff_t p : {2u, 5u}) {
        PrimeField F(p);
        std::uniform_int_distribution<coeff_t> coeff(0, p - 1);
        const index_t n = 12;
        std::vector<int> degrees(static_cast<std::size_t>(n), 0);
        SparseColumnMatrix S = SparseColumnMatrix::identity(n, degrees);
        for (index_t j = 0; j < n; ++j)
            for (index_t i = 0; i < j; ++i) {
                coeff_t v = coeff(rng);
                if (v) S.column(j).set(i, v);
            }
        SparseColumnMatrix inv = S.upper_triangular_inverse(F);
        SparseColumnMatrix prod = S.times(inv, F);
        CHECK(prod == SparseColumnMatrix::identity(n, degrees));
    }
}

TEST_CASE("display values are square roots only for radius filtrations") {
    auto K = std::make_shared<SimplicialComplex>(
        SimplicialComplex::closure_of({Simplex({0, 1})}));
    auto f = [](const Simplex& s) { return s.dimension() == 1 ? FiltValue(4) : FiltValue(0); };
    auto plain = elementwise_filtration(K, f, /*squared_radii=*/false);
    auto squared = elementwise_filtration(K, f, /*squared_radii=*/true);
    CHECK_FALSE(plain.values_are_squared_radii());
    CHECK(squared.values_are_squared_radii());
    CHECK(plain.display_value_at(2) == doctest::Approx(4.0));
    CHECK(squared.display_value_at(2) == doctest::Approx(2.0));
}

TEST_SUITE_END();
