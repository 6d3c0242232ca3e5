// wrapser: exact geometric predicates with a floating-point interval filter
#pragma once

#include <wrapser/common.hpp>
#include <wrapser/value.hpp>

#include <vector>

namespace wrapser {

class PointCloud;

// Closed interval with outward-rounded endpoints; every operation widens by an
// ulp on each side, so the true value always stays inside. Cheap enough to
// screen predicate calls before falling back to exact rationals.
struct Interval {
    double lo, hi;

    static Interval exact(double v) { return {v, v}; }
    static Interval of_mpz(const mpz_class& v);
    static Interval of_mpq(const mpq_class& v);

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;
    Interval squared() const;

    // +1 / -1 when the interval is strictly positive/negative, 0 when undecided
    int sign_or_zero() const {
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        return 0;
    }
    bool decided() const { return lo > 0 || hi < 0; }
};

// Circumscribing ball in *scaled* integer coordinates (center and squared
// radius are rationals over the cloud's common denominator).
struct ScaledBall {
    std::vector<mpq_class> center;
    mpq_class squared_radius;
    // outward double bounds of the exact values, cached for the filter
    std::vector<Interval> center_iv;
    Interval r2_iv;
};

// Orientation sign of d+1 points (d = cloud dimension): sign of
// det(p1-p0, ..., pd-p0). Exact; 0 means affinely dependent.
int orientation(const PointCloud& X, const std::vector<index_t>& ids);

// true when the ids span an affine subspace of full cardinality-1 dimension
bool affinely_independent(const PointCloud& X, const std::vector<index_t>& ids);

// Smallest sphere through all given (affinely independent) points: the one
// centered in their affine hull. Throws DegeneracyError when dependent.
ScaledBall circumball_scaled(const PointCloud& X, const std::vector<index_t>& ids);

// -1 strictly outside, 0 on the sphere, +1 strictly inside
int ball_side(const PointCloud& X, const ScaledBall& ball, index_t q);

}  // namespace wrapser
