// wrapser: elementwise filtrations (one simplex per step, faces first)
#pragma once

#include <wrapser/chain.hpp>
#include <wrapser/simplex.hpp>
#include <wrapser/value.hpp>

#include <functional>
#include <memory>

namespace wrapser {

// A total order sigma_1 < ... < sigma_l on a complex whose prefixes are
// subcomplexes, together with the (monotone, exact) values that induced it.
// Positions are 0-based here; the classical 1-based index is position+1.
class ElementwiseFiltration {
  public:
    ElementwiseFiltration() = default;

    const SimplicialComplex& complex() const { return *complex_; }
    std::shared_ptr<const SimplicialComplex> complex_ptr() const { return complex_; }
    index_t size() const { return static_cast<index_t>(order_.size()); }

    index_t position_of_id(index_t complex_id) const {
        return position_[static_cast<std::size_t>(complex_id)];
    }
    index_t id_at(index_t position) const { return order_[static_cast<std::size_t>(position)]; }
    const Simplex& simplex_at(index_t position) const { return complex_->simplex(id_at(position)); }
    int degree_at(index_t position) const { return simplex_at(position).dimension(); }

    // exact value of the inducing function (a squared radius for geometric
    // filtrations), monotone along the order
    const FiltValue& value_at(index_t position) const {
        return values_[static_cast<std::size_t>(position)];
    }
    bool values_are_squared_radii() const { return squared_; }
    // user-facing value: sqrt of the stored rational for radius filtrations
    double display_value_at(index_t position) const;

    // number of positions with value <= r (resp. < r); prefixes are subcomplexes
    index_t sublevel_size(const FiltValue& r) const;
    index_t strict_sublevel_size(const FiltValue& r) const;

    // boundary of the simplex at `position`, in filtration coordinates
    Chain boundary_chain(index_t position, const PrimeField& F) const;
    // boundary of an arbitrary simplex of the complex
    Chain boundary_chain(const Simplex& s, const PrimeField& F) const;

    friend ElementwiseFiltration elementwise_filtration(
        std::shared_ptr<const SimplicialComplex> K,
        const std::function<FiltValue(const Simplex&)>& f, bool squared_radii);

  private:
    std::shared_ptr<const SimplicialComplex> complex_;
    std::vector<index_t> order_;     // position -> complex id
    std::vector<index_t> position_;  // complex id -> position
    std::vector<FiltValue> values_;  // by position, monotone
    bool squared_ = false;
};

// Sort by f, ties by dimension, ties by vertex-lexicographic order, then verify
// monotonicity (f(facet) <= f(simplex)) and prefix-closedness. Throws DataError
// naming a violating facet pair if f is not monotone.
ElementwiseFiltration elementwise_filtration(std::shared_ptr<const SimplicialComplex> K,
                                             const std::function<FiltValue(const Simplex&)>& f,
                                             bool squared_radii = false);

}  // namespace wrapser
