#include <wrapser/flow.hpp>

#include <algorithm>
#include <stdexcept>

namespace wrapser {

bool FlowContext::reduced_in_degree(int n) const {
    for (const auto& [a, b] : pairs) {
        if (degree[static_cast<std::size_t>(a)] != n) continue;
        auto piv = chain_pivot(boundary.column(b));
        if (!piv || *piv != a) return false;
    }
    return true;
}

FlowContext make_flow_context(SparseColumnMatrix boundary, std::vector<int> degree,
                              const PrimeField& field,
                              std::vector<std::pair<index_t, index_t>> pairs) {
    const index_t l = boundary.columns();
    if (static_cast<index_t>(degree.size()) != l)
        throw std::invalid_argument("flow context: degree table size mismatch");

    FlowContext ctx;
    ctx.pair_of_facet.assign(static_cast<std::size_t>(l), -1);
    ctx.pair_of_cofacet.assign(static_cast<std::size_t>(l), -1);
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        auto [a, b] = pairs[t];
        if (a < 0 || a >= l || b < 0 || b >= l)
            throw std::invalid_argument("flow context: pair index out of range");
        if (degree[static_cast<std::size_t>(b)] != degree[static_cast<std::size_t>(a)] + 1)
            throw std::invalid_argument("flow context: pair is not a facet/cofacet pair");
        if (boundary.entry(a, b) == 0)
            throw std::invalid_argument("flow context: cofacet boundary misses the facet");
        if (ctx.pair_of_facet[static_cast<std::size_t>(a)] >= 0 ||
            ctx.pair_of_cofacet[static_cast<std::size_t>(a)] >= 0 ||
            ctx.pair_of_facet[static_cast<std::size_t>(b)] >= 0 ||
            ctx.pair_of_cofacet[static_cast<std::size_t>(b)] >= 0)
            throw std::invalid_argument("flow context: pairs are not disjoint");
        ctx.pair_of_facet[static_cast<std::size_t>(a)] = static_cast<index_t>(t);
        ctx.pair_of_cofacet[static_cast<std::size_t>(b)] = static_cast<index_t>(t);
    }

    // acyclicity: every facet entry a' of a cofacet boundary with a' paired
    // elsewhere forces f(pair of a') < f(this pair); a cycle of such
    // constraints rules out any compatible monotone function
    {
        std::vector<std::vector<index_t>> succ(pairs.size());
        std::vector<index_t> indegree(pairs.size(), 0);
        for (std::size_t t = 0; t < pairs.size(); ++t) {
            auto [a, b] = pairs[t];
            for (const auto& e : boundary.column(b).entries()) {
                if (e.index == a) continue;
                index_t s = ctx.pair_of_facet[static_cast<std::size_t>(e.index)];
                if (s < 0) continue;
                succ[static_cast<std::size_t>(s)].push_back(static_cast<index_t>(t));
                ++indegree[t];
            }
        }
        std::vector<index_t> queue;
        for (std::size_t t = 0; t < pairs.size(); ++t)
            if (indegree[t] == 0) queue.push_back(static_cast<index_t>(t));
        std::size_t done = 0;
        while (done < queue.size()) {
            index_t t = queue[done++];
            for (index_t s : succ[static_cast<std::size_t>(t)])
                if (--indegree[static_cast<std::size_t>(s)] == 0) queue.push_back(s);
        }
        if (done != pairs.size())
            throw std::invalid_argument(
                "flow context: pairs admit no compatible monotone function (cyclic)");
    }

    ctx.boundary = std::move(boundary);
    ctx.degree = std::move(degree);
    ctx.field = field;
    ctx.pairs = std::move(pairs);
    return ctx;
}

FlowContext make_derived_flow_context(const ReductionResult& res, DerivedBasis basis) {
    const index_t l = res.D.columns();
    std::vector<int> degree(static_cast<std::size_t>(l));
    for (index_t i = 0; i < l; ++i)
        degree[static_cast<std::size_t>(i)] = res.filtration->degree_at(i);

    SparseColumnMatrix T = derived_basis_matrix(res, basis);
    SparseColumnMatrix Tinv = T.upper_triangular_inverse(res.field);
    SparseColumnMatrix B(l);
    for (index_t j = 0; j < l; ++j) {
        int n = degree[static_cast<std::size_t>(j)];
        Chain img = res.D.apply(T.column(j), res.field, n - 1);
        B.column(j) = Tinv.apply(img, res.field, n - 1);
    }

    AlgebraicGradient grad =
        basis == DerivedBasis::reduction ? reduction_gradient(res) : decomposition_gradient(res);
    return make_flow_context(std::move(B), std::move(degree), res.field, std::move(grad.pairs));
}

Chain apply_F(const FlowContext& ctx, const Chain& c) {
    std::vector<ChainEntry> entries;
    for (const auto& e : c.entries()) {
        index_t slot = ctx.pair_of_facet[static_cast<std::size_t>(e.index)];
        if (slot < 0) continue;
        auto [a, b] = ctx.pairs[static_cast<std::size_t>(slot)];
        coeff_t inc = ctx.boundary.entry(a, b);
        entries.push_back({b, ctx.field.mul(ctx.field.neg(e.value), ctx.field.inv(inc))});
    }
    return Chain(c.degree() + 1, std::move(entries));
}

Chain flow_once(const FlowContext& ctx, const Chain& c) {
    const int n = c.degree();
    Chain out = c;
    out.add_scaled(ctx.boundary.apply(apply_F(ctx, c), ctx.field, n), 1, ctx.field);
    out.add_scaled(apply_F(ctx, ctx.boundary.apply(c, ctx.field, n - 1)), 1, ctx.field);
    return out;
}

Chain stabilized_flow(const FlowContext& ctx, const Chain& c) {
    Chain cur = c;
    const index_t cap = ctx.size() * ctx.size() + 1;
    for (index_t round = 0; round < cap; ++round) {
        Chain next = flow_once(ctx, cur);
        if (next == cur) return cur;
        cur = std::move(next);
    }
    throw InvariantViolation("flow failed to stabilize within the iteration cap");
}

bool is_flow_invariant(const FlowContext& ctx, const Chain& c) {
    return flow_once(ctx, c) == c;
}

namespace {

void require_cycle(const FlowContext& ctx, const Chain& c) {
    if (!ctx.boundary.apply(c, ctx.field, c.degree() - 1).is_zero())
        throw std::invalid_argument("flow reduction: input chain is not a cycle");
}

}  // namespace

Chain gradient_flow_reduction(const FlowContext& ctx, const Chain& cycle) {
    require_cycle(ctx, cycle);
    if (!ctx.reduced_in_degree(cycle.degree()))
        throw std::invalid_argument("gradient flow reduction needs a gradient reduced in the "
                                    "cycle's degree");
    Chain c = cycle;
    for (index_t i = 0; i < ctx.size(); ++i) {
        coeff_t ci = c.coefficient(i);
        if (ci == 0) continue;
        index_t slot = ctx.pair_of_facet[static_cast<std::size_t>(i)];
        if (slot < 0) continue;
        auto [a, b] = ctx.pairs[static_cast<std::size_t>(slot)];
        coeff_t mu = ctx.field.mul(ctx.field.neg(ci), ctx.field.inv(ctx.boundary.entry(a, b)));
        c.add_scaled(ctx.boundary.column(b), mu, ctx.field);
    }
    return c;
}

Chain stabilized_flow_reduction(const FlowContext& ctx, const Chain& cycle) {
    require_cycle(ctx, cycle);
    Chain c = cycle;
    const index_t cap = ctx.size() * ctx.size() + 1;
    for (index_t round = 0; round < cap; ++round) {
        index_t facet = -1;
        for (const auto& e : c.entries())
            if (ctx.pair_of_facet[static_cast<std::size_t>(e.index)] >= 0) {
                facet = e.index;
                break;
            }
        if (facet < 0) return c;
        index_t slot = ctx.pair_of_facet[static_cast<std::size_t>(facet)];
        auto [a, b] = ctx.pairs[static_cast<std::size_t>(slot)];
        coeff_t mu = ctx.field.mul(ctx.field.neg(c.coefficient(facet)),
                                   ctx.field.inv(ctx.boundary.entry(a, b)));
        c.add_scaled(ctx.boundary.column(b), mu, ctx.field);
    }
    throw InvariantViolation("stabilized flow reduction exceeded the elimination cap");
}

namespace {

index_t rank_of(std::vector<Chain> cols, const PrimeField& F) {
    std::vector<std::pair<index_t, Chain>> basis;  // (pivot, column)
    index_t rank = 0;
    for (Chain& c : cols) {
        for (;;) {
            auto piv = chain_pivot(c);
            if (!piv) break;
            auto it = std::find_if(basis.begin(), basis.end(),
                                   [&](const auto& p) { return p.first == *piv; });
            if (it == basis.end()) {
                basis.emplace_back(*piv, std::move(c));
                ++rank;
                break;
            }
            coeff_t mu = F.mul(F.neg(c.coefficient(*piv)),
                               F.inv(it->second.coefficient(*piv)));
            c.add_scaled(it->second, mu, F);
        }
    }
    return rank;
}

}  // namespace

bool generates_boundaries_in_degree(const FlowContext& ctx, int n) {
    std::vector<Chain> all, grad;
    for (index_t j = 0; j < ctx.size(); ++j)
        if (ctx.degree[static_cast<std::size_t>(j)] == n + 1 && !ctx.boundary.column(j).is_zero())
            all.push_back(ctx.boundary.column(j));
    for (const auto& [a, b] : ctx.pairs)
        if (ctx.degree[static_cast<std::size_t>(a)] == n) grad.push_back(ctx.boundary.column(b));
    return rank_of(std::move(grad), ctx.field) == rank_of(std::move(all), ctx.field);
}

Chain lex_minimal_cycle(const Chain& z, const ReductionResult& res, index_t prefix_len,
                        bool literal_stabilization) {
    const index_t l = res.D.columns();
    if (prefix_len < 0) prefix_len = l;
    if (prefix_len > l) throw std::invalid_argument("lex_minimal_cycle: prefix too long");
    if (!res.totally_reduced)
        throw std::invalid_argument("lex_minimal_cycle needs a totally reduced reduction");
    for (const auto& e : z.entries())
        if (e.index >= prefix_len)
            throw std::invalid_argument("lex_minimal_cycle: chain leaves the prefix complex");
    if (!res.D.apply(z, res.field, z.degree() - 1).is_zero())
        throw std::invalid_argument("lex_minimal_cycle: input chain is not a cycle");

    const PrimeField& F = res.field;
    std::vector<coeff_t> dense(static_cast<std::size_t>(prefix_len), 0);
    for (const auto& e : z.entries()) dense[static_cast<std::size_t>(e.index)] = e.value;

    // an index is eliminable when it is a birth whose death also lies in the
    // prefix; births dying past the prefix are essential there and stay
    auto death_in_prefix = [&](index_t i) -> index_t {
        if (res.index_class[static_cast<std::size_t>(i)] != IndexClass::birth) return -1;
        const auto& p = res.partner[static_cast<std::size_t>(i)];
        if (!p || *p >= prefix_len) return -1;
        return *p;
    };
    auto eliminate = [&](index_t i, index_t j) {
        const Chain& Rj = res.R.column(j);
        coeff_t mu = F.mul(F.neg(dense[static_cast<std::size_t>(i)]),
                           F.inv(Rj.coefficient(i)));
        for (const auto& e : Rj.entries())
            dense[static_cast<std::size_t>(e.index)] =
                F.add(dense[static_cast<std::size_t>(e.index)], F.mul(mu, e.value));
    };

    if (!literal_stabilization) {
        // each R_j has pivot i, so an elimination touches only rows below the
        // cursor and a single descending pass settles everything
        for (index_t i = prefix_len - 1; i >= 0; --i) {
            if (dense[static_cast<std::size_t>(i)] == 0) continue;
            index_t j = death_in_prefix(i);
            if (j >= 0) eliminate(i, j);
        }
    } else {
        const index_t cap = l * l + 1;
        index_t round = 0;
        for (;; ++round) {
            if (round >= cap)
                throw InvariantViolation("lex_minimal_cycle: elimination failed to terminate");
            index_t i = -1, j = -1;
            for (index_t t = 0; t < prefix_len; ++t)
                if (dense[static_cast<std::size_t>(t)] != 0 && (j = death_in_prefix(t)) >= 0) {
                    i = t;
                    break;
                }
            if (i < 0) break;
            eliminate(i, j);
        }
    }

    std::vector<ChainEntry> entries;
    for (index_t i = 0; i < prefix_len; ++i)
        if (dense[static_cast<std::size_t>(i)] != 0)
            entries.push_back({i, dense[static_cast<std::size_t>(i)]});
    return Chain(z.degree(), std::move(entries));
}

}  // namespace wrapser
