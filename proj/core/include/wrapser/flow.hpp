// wrapser: algebraic Morse flows and lexicographically minimal cycles
#pragma once

#include <wrapser/matrix.hpp>
#include <wrapser/reduction.hpp>

#include <utility>
#include <vector>

namespace wrapser {

// An algebraic gradient (disjoint facet/cofacet index pairs with invertible
// incidence coefficient) together with the boundary operator of the basis it
// lives on. Immutable once built; every flow operation is pure.
struct FlowContext {
    SparseColumnMatrix boundary;                     // the boundary in the working basis
    std::vector<int> degree;                         // degree of each basis index
    PrimeField field{2};
    std::vector<std::pair<index_t, index_t>> pairs;  // (facet, cofacet)
    std::vector<index_t> pair_of_facet;              // basis index -> pair slot, -1 if none
    std::vector<index_t> pair_of_cofacet;

    index_t size() const { return boundary.columns(); }
    bool is_critical(index_t i) const {
        return pair_of_facet[static_cast<std::size_t>(i)] < 0 &&
               pair_of_cofacet[static_cast<std::size_t>(i)] < 0;
    }
    // pivot(boundary of cofacet) = facet, for every pair whose facet has degree n
    bool reduced_in_degree(int n) const;
};

// Validates that the pairs form an algebraic gradient: degrees rise by one
// across each pair, the incidence coefficient is non-zero, no index appears
// twice, and the facet relation between pairs is acyclic (so a compatible
// monotone function with equal values exactly on the pairs exists). Throws
// std::invalid_argument otherwise.
FlowContext make_flow_context(SparseColumnMatrix boundary, std::vector<int> degree,
                              const PrimeField& field,
                              std::vector<std::pair<index_t, index_t>> pairs);

// context for a derived gradient of a reduction, in its own basis: the
// boundary becomes T^{-1} D T for the change of basis T
FlowContext make_derived_flow_context(const ReductionResult& res, DerivedBasis basis);

// F(sigma) = -1/<boundary(tau), sigma> * tau on paired facets sigma, zero on
// every other basis element, extended linearly; raises degree by one
Chain apply_F(const FlowContext& ctx, const Chain& c);

// Phi(c) = c + boundary(F(c)) + F(boundary(c)); a chain map, with F a chain
// homotopy between it and the identity
Chain flow_once(const FlowContext& ctx, const Chain& c);

// fixed point of iterating the flow; the iteration cap (size^2 rounds) guards
// against a broken context and is never reached on a valid gradient
Chain stabilized_flow(const FlowContext& ctx, const Chain& c);

bool is_flow_invariant(const FlowContext& ctx, const Chain& c);

// Single ascending pass eliminating gradient-facet entries of the cycle with
// the boundary columns of their cofacets. Equals flow_once on cycles when the
// gradient is reduced in the cycle's degree (both preconditions checked).
Chain gradient_flow_reduction(const FlowContext& ctx, const Chain& cycle);

// Eliminate gradient-facet entries until none remain (any order); on cycles
// this computes the stabilized flow without needing a reduced gradient.
Chain stabilized_flow_reduction(const FlowContext& ctx, const Chain& cycle);

// true when the cofacet boundaries of pairs with facet degree n span all
// degree-n boundaries (rank comparison over the context field)
bool generates_boundaries_in_degree(const FlowContext& ctx, int n);

// The unique lexicographically minimal cycle homologous to z within the
// prefix complex on the first prefix_len positions (default: everything).
// One descending pass replaces each entry at a non-essential birth index i by
// smaller terms using the totally reduced column R_j of its death partner;
// with literal_stabilization the eliminations instead repeat smallest-first
// until exhausted (cross-check mode). Requires res.totally_reduced.
Chain lex_minimal_cycle(const Chain& z, const ReductionResult& res, index_t prefix_len = -1,
                        bool literal_stabilization = false);

}  // namespace wrapser
