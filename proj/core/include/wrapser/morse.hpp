// wrapser: generalized discrete Morse functions, gradients, descending complexes
#pragma once

#include <wrapser/filtration.hpp>
#include <wrapser/simplex.hpp>
#include <wrapser/value.hpp>

#include <functional>
#include <memory>

namespace wrapser {

class PointCloud;

// A face-poset interval [rho, phi] of simplices sharing one function value.
// Singleton intervals are critical.
struct MorseInterval {
    index_t lower, upper;          // complex ids of rho and phi
    std::vector<index_t> members;  // complex ids, sorted
    FiltValue value;
    bool is_critical() const { return lower == upper; }
};

// The unique partition of a complex into intervals induced by a generalized
// discrete Morse function.
class GradientPartition {
  public:
    const SimplicialComplex& complex() const { return *complex_; }
    std::shared_ptr<const SimplicialComplex> complex_ptr() const { return complex_; }
    const std::vector<MorseInterval>& intervals() const { return intervals_; }
    index_t interval_of(index_t complex_id) const {
        return interval_index_[static_cast<std::size_t>(complex_id)];
    }
    const FiltValue& value_of(index_t complex_id) const {
        return intervals_[static_cast<std::size_t>(interval_of(complex_id))].value;
    }
    // complex ids of critical simplices, sorted
    std::vector<index_t> critical_simplices() const;

    friend GradientPartition gradient_partition(std::shared_ptr<const SimplicialComplex> K,
                                                const std::vector<FiltValue>& value_by_id);

  private:
    std::shared_ptr<const SimplicialComplex> complex_;
    std::vector<MorseInterval> intervals_;   // sorted by (value, lower id)
    std::vector<index_t> interval_index_;    // complex id -> interval
};

// Group simplices by exact value, split into facet-connected components and
// verify each is an interval [rho, phi]. Throws NotMorseError with a witness
// when f is not generalized-discrete-Morse, DataError when not monotone.
GradientPartition gradient_partition(std::shared_ptr<const SimplicialComplex> K,
                                     const std::vector<FiltValue>& value_by_id);
GradientPartition gradient_partition(std::shared_ptr<const SimplicialComplex> K,
                                     const std::function<FiltValue(const Simplex&)>& f);

// A discrete gradient: disjoint facet pairs plus the leftover critical ids.
struct DiscretePairing {
    std::shared_ptr<const SimplicialComplex> complex;
    std::vector<std::pair<index_t, index_t>> pairs;  // (facet id, cofacet id)
    std::vector<index_t> critical;                   // sorted complex ids

    bool is_paired(index_t id) const;
};

// Replace every regular interval [rho, phi] by the vertex matching with
// v = min(phi \ rho): pairs (psi \ v, psi u v). Critical simplices persist.
DiscretePairing minimal_vertex_refinement(const GradientPartition& partition);

// Pairs (sigma, tau) where sigma is the maximal facet of tau and tau the
// minimal cofacet of sigma, w.r.t. the filtration order. Order-only notion.
DiscretePairing apparent_pairs(const ElementwiseFiltration& filt);

// ... restricted to pairs whose filtration values agree exactly
DiscretePairing zero_persistence_apparent_pairs(const ElementwiseFiltration& filt);

// Union of all intervals reachable from the given critical simplices by
// repeatedly passing to intervals containing a face of a member (the union of
// down sets in the interval order). Throws std::invalid_argument if a given id
// is not critical.
SimplicialComplex descending_complex(const GradientPartition& partition,
                                     const std::vector<index_t>& critical_ids);

// descending complex of all critical simplices with value <= threshold
SimplicialComplex descending_complex(const GradientPartition& partition,
                                     const FiltValue& threshold);

// the same down-set construction over the intervals of a discrete pairing
// (its pairs and critical singletons), e.g. a refined gradient
SimplicialComplex descending_complex(const DiscretePairing& pairing,
                                     const std::vector<index_t>& critical_ids);

// same, but selecting criticals by an alternative interval-compatible
// monotone value assignment g (one value per interval of the partition)
SimplicialComplex descending_complex(const GradientPartition& partition,
                                     const std::vector<FiltValue>& g_by_interval,
                                     const FiltValue& threshold);

// Wrap complex of a point cloud at radius r (exact): descending complex of
// the Delaunay radius function at value r^2. Negative r gives the empty complex.
SimplicialComplex wrap_complex(const PointCloud& X, const FiltValue& r);

}  // namespace wrapser
