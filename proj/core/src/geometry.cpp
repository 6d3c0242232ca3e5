#include <wrapser/geometry.hpp>

#include <wrapser/predicates.hpp>

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace wrapser {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

Ball to_input_units(const ScaledBall& b, const mpz_class& scale) {
    Ball out;
    out.center.reserve(b.center.size());
    for (const auto& c : b.center) {
        FiltValue v = c / mpq_class(scale);
        v.canonicalize();
        out.center.push_back(v);
    }
    out.squared_radius = b.squared_radius / mpq_class(scale * scale);
    out.squared_radius.canonicalize();
    return out;
}

}  // namespace

FiltValue PointCloud::coordinate(index_t i, int k) const {
    FiltValue v(scaled_coord(i, k));
    v /= mpq_class(scale_);
    v.canonicalize();
    return v;
}

PointCloud PointCloud::from_rows(const std::vector<std::vector<std::string>>& rows, bool perturb) {
    if (rows.empty()) throw DataError("point cloud is empty");
    const int dim = static_cast<int>(rows.front().size());
    if (dim != 2 && dim != 3)
        throw DataError("points must have 2 or 3 coordinates, got " + std::to_string(dim));

    std::vector<mpq_class> vals;
    vals.reserve(rows.size() * dim);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != dim)
            throw DataError("row " + std::to_string(i) + " has " +
                            std::to_string(rows[i].size()) + " coordinates, expected " +
                            std::to_string(dim));
        for (const auto& cell : rows[i]) vals.push_back(parse_decimal(cell));
    }

    // exact duplicate detection before any perturbation
    {
        std::vector<std::size_t> idx(rows.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            for (int k = 0; k < dim; ++k) {
                int c = ::cmp(vals[a * dim + k], vals[b * dim + k]);
                if (c != 0) return c < 0;
            }
            return false;
        });
        for (std::size_t t = 1; t < idx.size(); ++t) {
            bool equal = true;
            for (int k = 0; k < dim; ++k)
                if (vals[idx[t - 1] * dim + k] != vals[idx[t] * dim + k]) {
                    equal = false;
                    break;
                }
            if (equal)
                throw DataError("duplicate points: rows " + std::to_string(idx[t - 1]) + " and " +
                                std::to_string(idx[t]) + " are identical");
        }
    }

    if (perturb && rows.size() > 1) {
        // deterministic offsets: hash(i, axis) / 2^40 of the largest extent
        mpq_class extent = 0;
        for (int k = 0; k < dim; ++k) {
            mpq_class mn = vals[static_cast<std::size_t>(k)], mx = mn;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const auto& v = vals[i * dim + k];
                if (v < mn) mn = v;
                if (v > mx) mx = v;
            }
            if (mx - mn > extent) extent = mx - mn;
        }
        if (extent == 0) extent = 1;
        mpz_class denom;
        mpz_ui_pow_ui(denom.get_mpz_t(), 2, 72);  // 2^32 hash bits / 2^40 magnitude
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (int k = 0; k < dim; ++k) {
                std::uint64_t h = splitmix64(i * 7919 + static_cast<std::uint64_t>(k));
                mpq_class off(mpz_class(static_cast<unsigned long>(h & 0xffffffffull)), denom);
                off *= extent;
                off.canonicalize();
                vals[i * dim + k] += off;
                vals[i * dim + k].canonicalize();
            }
    }

    PointCloud X;
    X.dim_ = dim;
    X.n_ = rows.size();
    X.perturbed_ = perturb;

    // common denominator -> integer coordinates
    mpz_class scale = 1;
    for (const auto& v : vals) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
    X.scale_ = scale;
    X.coords_.reserve(vals.size());
    for (const auto& v : vals) {
        mpq_class s = v * mpq_class(scale);
        s.canonicalize();
        if (s.get_den() != 1) throw InvariantViolation("coordinate scaling failed");
        X.coords_.push_back(s.get_num());
    }

    X.approx_.reserve(vals.size());
    X.lo_.reserve(vals.size());
    X.hi_.reserve(vals.size());
    for (std::size_t t = 0; t < vals.size(); ++t) {
        X.approx_.push_back(vals[t].get_d());
        Interval iv = Interval::of_mpz(X.coords_[t]);
        X.lo_.push_back(iv.lo);
        X.hi_.push_back(iv.hi);
    }
    return X;
}

PointCloud PointCloud::from_doubles(const std::vector<std::vector<double>>& rows, bool perturb) {
    std::vector<std::vector<std::string>> text;
    text.reserve(rows.size());
    char buf[64];
    for (const auto& row : rows) {
        std::vector<std::string> r;
        for (double v : row) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            r.emplace_back(buf);
        }
        text.push_back(std::move(r));
    }
    return from_rows(text, perturb);
}

Ball min_enclosing_ball(const PointCloud& X, const std::vector<index_t>& ids) {
    const int d = X.dimension();
    if (ids.empty() || ids.size() > 25)
        throw std::invalid_argument("min_enclosing_ball: 1..25 points required");

    // the optimum is the circumball of an affinely independent support subset
    // of at most d+1 points, so enumerating subsets is exhaustive
    const unsigned m = static_cast<unsigned>(ids.size());
    const ScaledBall* best = nullptr;
    ScaledBall candidate, best_ball;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<index_t> subset;
        for (unsigned b = 0; b < m; ++b)
            if (mask & (1u << b)) subset.push_back(ids[b]);
        if (static_cast<int>(subset.size()) > d + 1) continue;
        if (!affinely_independent(X, subset)) continue;
        candidate = circumball_scaled(X, subset);
        bool contains_all = true;
        for (index_t q : ids)
            if (ball_side(X, candidate, q) < 0) {
                contains_all = false;
                break;
            }
        if (!contains_all) continue;
        if (!best || candidate.squared_radius < best->squared_radius) {
            best_ball = candidate;
            best = &best_ball;
        }
    }
    if (!best) throw InvariantViolation("min_enclosing_ball: no candidate ball found");
    return to_input_units(best_ball, X.scale());
}

Ball circumsphere(const PointCloud& X, const std::vector<index_t>& ids) {
    return to_input_units(circumball_scaled(X, ids), X.scale());
}

namespace {

// squared radii in scaled units, by complex id; shared by the public entry
// points (they differ in whether K is re-verified)
std::vector<mpq_class> delaunay_values_scaled(const SimplicialComplex& K, const PointCloud& X) {
    std::vector<mpq_class> val(static_cast<std::size_t>(K.size()));
    std::vector<char> done(static_cast<std::size_t>(K.size()), 0);
    const int top = K.dimension();
    for (int dim = top; dim >= 0; --dim) {
        for (index_t id : K.simplices_of_dimension(dim)) {
            const Simplex& s = K.simplex(id);
            std::vector<index_t> ids(s.vertices().begin(), s.vertices().end());
            bool is_top_cell = (dim == top);
            if (!is_top_cell) {
                // Gabriel test: smallest circumscribing ball empty of X?
                ScaledBall ball = circumball_scaled(X, ids);
                bool empty = true;
                for (index_t q = 0; q < X.size(); ++q) {
                    if (std::find(ids.begin(), ids.end(), q) != ids.end()) continue;
                    if (ball_side(X, ball, q) > 0) {
                        empty = false;
                        break;
                    }
                }
                if (empty) {
                    val[static_cast<std::size_t>(id)] = ball.squared_radius;
                    done[static_cast<std::size_t>(id)] = 1;
                    continue;
                }
                const auto& cofs = K.cofacets(id);
                if (cofs.empty())
                    throw InvariantViolation("non-Gabriel simplex without cofacets");
                mpq_class best;
                bool first = true;
                for (index_t c : cofs) {
                    if (!done[static_cast<std::size_t>(c)])
                        throw InvariantViolation("cofacet value not yet computed");
                    const auto& v = val[static_cast<std::size_t>(c)];
                    if (first || v < best) {
                        best = v;
                        first = false;
                    }
                }
                val[static_cast<std::size_t>(id)] = best;
                done[static_cast<std::size_t>(id)] = 1;
            } else {
                // top cells: circumball is empty by the Delaunay property
                val[static_cast<std::size_t>(id)] = circumball_scaled(X, ids).squared_radius;
                done[static_cast<std::size_t>(id)] = 1;
            }
        }
    }
    return val;
}

std::vector<FiltValue> to_input_units_squared(std::vector<mpq_class> scaled, const mpz_class& s) {
    mpq_class s2(s * s);
    std::vector<FiltValue> out;
    out.reserve(scaled.size());
    for (auto& v : scaled) {
        v /= s2;
        v.canonicalize();
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

std::vector<FiltValue> delaunay_radius_values(const SimplicialComplex& K, const PointCloud& X) {
    if (!(K == delaunay_complex(X)))
        throw DataError("delaunay_radius_values: K is not the Delaunay complex of X");
    return to_input_units_squared(delaunay_values_scaled(K, X), X.scale());
}

std::vector<FiltValue> cech_radius_values(const SimplicialComplex& K, const PointCloud& X) {
    std::vector<FiltValue> out(static_cast<std::size_t>(K.size()));
    mpq_class s2(X.scale() * X.scale());
    for (index_t id = 0; id < K.size(); ++id) {
        const Simplex& s = K.simplex(id);
        for (vertex_t v : s.vertices())
            if (v < 0 || v >= X.size())
                throw DataError("cech_radius_values: simplex vertex is not a point id");
        std::vector<index_t> ids(s.vertices().begin(), s.vertices().end());
        // enumerate support subsets in scaled units, convert once
        Ball b = min_enclosing_ball(X, ids);
        out[static_cast<std::size_t>(id)] = b.squared_radius;
    }
    return out;
}

SimplicialComplex cech_complex(const PointCloud& X, int max_dim, const FiltValue& max_radius) {
    if (max_radius < 0) return SimplicialComplex();
    FiltValue r2 = max_radius * max_radius;
    std::vector<Simplex> accepted;
    std::vector<Simplex> frontier;
    for (index_t i = 0; i < X.size(); ++i) {
        frontier.push_back(Simplex({static_cast<vertex_t>(i)}));
        accepted.push_back(frontier.back());
    }
    for (int dim = 1; dim <= max_dim; ++dim) {
        std::vector<Simplex> next;
        for (const auto& s : frontier)
            for (vertex_t v = s.vertices().back() + 1; v < X.size(); ++v) {
                Simplex cand = s.with_vertex(v);
                std::vector<index_t> ids(cand.vertices().begin(), cand.vertices().end());
                Ball b = min_enclosing_ball(X, ids);
                if (b.squared_radius <= r2) next.push_back(cand);
            }
        accepted.insert(accepted.end(), next.begin(), next.end());
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return SimplicialComplex::from_closed_set(std::move(accepted));
}

ElementwiseFiltration delaunay_radius_filtration(const PointCloud& X) {
    auto K = std::make_shared<SimplicialComplex>(delaunay_complex(X));
    auto values = to_input_units_squared(delaunay_values_scaled(*K, X), X.scale());
    return elementwise_filtration(
        K, [&](const Simplex& s) { return values[static_cast<std::size_t>(*K->id_of(s))]; },
        /*squared_radii=*/true);
}

}  // namespace wrapser
