// wrapser: point clouds, Delaunay complexes, Cech/Delaunay radius functions
#pragma once

#include <wrapser/filtration.hpp>
#include <wrapser/simplex.hpp>
#include <wrapser/value.hpp>

#include <string>
#include <vector>

namespace wrapser {

// Points in R^2 or R^3 with exact coordinates: decimals are scaled by a common
// power of ten into big integers, so every predicate can be decided exactly.
// Optional deterministic perturbation (applied before scaling) nudges each
// coordinate by hash(i,axis)/2^40 of the largest bounding-box extent.
class PointCloud {
  public:
    static PointCloud from_rows(const std::vector<std::vector<std::string>>& rows, bool perturb);
    // convenience for generated data: doubles are printed to shortest
    // round-trip decimals and parsed exactly
    static PointCloud from_doubles(const std::vector<std::vector<double>>& rows, bool perturb);

    int dimension() const { return dim_; }
    index_t size() const { return static_cast<index_t>(n_); }
    bool perturbed() const { return perturbed_; }

    const mpz_class& scaled_coord(index_t i, int k) const {
        return coords_[static_cast<std::size_t>(i) * dim_ + k];
    }
    const mpz_class& scale() const { return scale_; }
    // exact coordinate in input units
    FiltValue coordinate(index_t i, int k) const;
    // double approximation in input units (what gets exported)
    double approx(index_t i, int k) const {
        return approx_[static_cast<std::size_t>(i) * dim_ + k];
    }
    // outward double bounds of the scaled integer coordinate (for filters)
    double scaled_lo(index_t i, int k) const {
        return lo_[static_cast<std::size_t>(i) * dim_ + k];
    }
    double scaled_hi(index_t i, int k) const {
        return hi_[static_cast<std::size_t>(i) * dim_ + k];
    }

  private:
    int dim_ = 0;
    std::size_t n_ = 0;
    bool perturbed_ = false;
    mpz_class scale_ = 1;
    std::vector<mpz_class> coords_;
    std::vector<double> approx_, lo_, hi_;
};

// Ball in input units: exact rational center and squared radius.
struct Ball {
    std::vector<FiltValue> center;
    FiltValue squared_radius;
};

// Smallest ball containing all the points. Works for affinely dependent
// inputs too; exact support-subset enumeration (support has <= d+1 points).
Ball min_enclosing_ball(const PointCloud& X, const std::vector<index_t>& ids);

// Smallest sphere passing through all the points (center in their affine
// hull). Throws DegeneracyError when the points are affinely dependent.
Ball circumsphere(const PointCloud& X, const std::vector<index_t>& ids);

// Delaunay complex by incremental insertion with a point-location walk and
// exact conflict tests. Degeneracies (affinely dependent cells, d+2
// cospherical points) raise DegeneracyError naming the points involved.
SimplicialComplex delaunay_complex(const PointCloud& X);

// Delaunay radius function r_X (squared radii, by complex id): circumradius
// for top cells; for lower simplices the circumball if empty (Gabriel), else
// the minimum over cofacets. K must equal delaunay_complex(X).
std::vector<FiltValue> delaunay_radius_values(const SimplicialComplex& K, const PointCloud& X);

// Cech radius function (squared min-enclosing-ball radii, by complex id) for
// an arbitrary complex on the cloud's vertex ids.
std::vector<FiltValue> cech_radius_values(const SimplicialComplex& K, const PointCloud& X);

// Cech complex up to a dimension cap and radius bound
SimplicialComplex cech_complex(const PointCloud& X, int max_dim, const FiltValue& max_radius);

// complex + values + order in one step (the pipeline's entry point)
ElementwiseFiltration delaunay_radius_filtration(const PointCloud& X);

}  // namespace wrapser
