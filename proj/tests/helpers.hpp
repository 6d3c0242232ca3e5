// shared test utilities: random instances and independent oracles
//
// Everything here is deliberately written against different algorithms than
// the library (dense elimination, subset enumeration, double-precision Welzl)
// so that agreement between the two is evidence, not circularity.
#pragma once

#include <wrapser/chain.hpp>
#include <wrapser/filtration.hpp>
#include <wrapser/fp.hpp>
#include <wrapser/geometry.hpp>
#include <wrapser/morse.hpp>
#include <wrapser/reduction.hpp>
#include <wrapser/simplex.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace testutil {

using wrapser::Chain;
using wrapser::ChainEntry;
using wrapser::ElementwiseFiltration;
using wrapser::FiltValue;
using wrapser::PointCloud;
using wrapser::PrimeField;
using wrapser::ReductionResult;
using wrapser::Simplex;
using wrapser::SimplicialComplex;
using wrapser::coeff_t;
using wrapser::index_t;
using wrapser::vertex_t;

using Rng = std::mt19937_64;

// ---------------------------------------------------------------- point clouds

// integer-grid cloud, resampled until it is duplicate-free and in general
// position (the Delaunay construction is the arbiter)
inline PointCloud random_cloud(Rng& rng, index_t n, int dim, int grid = 1000000) {
    std::uniform_int_distribution<int> coord(0, grid);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<std::vector<double>> rows(static_cast<std::size_t>(n),
                                              std::vector<double>(static_cast<std::size_t>(dim)));
        for (auto& row : rows)
            for (double& c : row) c = coord(rng);
        try {
            PointCloud X = PointCloud::from_doubles(rows, false);
            wrapser::delaunay_complex(X);
            return X;
        } catch (const wrapser::DataError&) {
        } catch (const wrapser::DegeneracyError&) {
        }
    }
    throw std::runtime_error("random_cloud: no general-position sample found");
}

// points near the unit circle/sphere, coordinates rounded to 6 decimals
inline PointCloud sphere_cloud(Rng& rng, index_t n, int dim, double jitter = 0.01) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> radial(1.0 - jitter, 1.0 + jitter);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<std::vector<double>> rows;
        for (index_t i = 0; i < n; ++i) {
            std::vector<double> p(static_cast<std::size_t>(dim));
            double norm2 = 0;
            do {
                norm2 = 0;
                for (double& c : p) {
                    c = gauss(rng);
                    norm2 += c * c;
                }
            } while (norm2 < 1e-12);
            double s = radial(rng) / std::sqrt(norm2);
            for (double& c : p) c = std::round(c * s * 1e6) / 1e6;
            rows.push_back(p);
        }
        try {
            PointCloud X = PointCloud::from_doubles(rows, false);
            wrapser::delaunay_complex(X);
            return X;
        } catch (const wrapser::DataError&) {
        } catch (const wrapser::DegeneracyError&) {
        }
    }
    throw std::runtime_error("sphere_cloud: no general-position sample found");
}

// --------------------------------------------------- dense linear algebra oracle

// rank over Z/p by plain dense Gaussian elimination
inline index_t dense_rank(std::vector<std::vector<coeff_t>> cols, const PrimeField& F) {
    if (cols.empty()) return 0;
    const std::size_t rows = cols[0].size();
    std::vector<std::pair<std::size_t, std::vector<coeff_t>>> pivots;
    for (auto& col : cols) {
        for (const auto& [r, pc] : pivots) {
            coeff_t v = col[r];
            if (v == 0) continue;
            for (std::size_t s = 0; s < rows; ++s) col[s] = F.sub(col[s], F.mul(v, pc[s]));
        }
        std::size_t r = 0;
        while (r < rows && col[r] == 0) ++r;
        if (r == rows) continue;
        coeff_t inv = F.inv(col[r]);
        for (std::size_t s = 0; s < rows; ++s) col[s] = F.mul(col[s], inv);
        pivots.emplace_back(r, col);
    }
    return static_cast<index_t>(pivots.size());
}

inline std::vector<coeff_t> dense_of(const Chain& c, index_t n) {
    std::vector<coeff_t> out(static_cast<std::size_t>(n), 0);
    for (const auto& e : c.entries()) out[static_cast<std::size_t>(e.index)] = e.value;
    return out;
}

// Betti numbers of the length-m prefix of a filtration: n_k - rank d_k - rank d_{k+1}
inline std::vector<index_t> prefix_betti_oracle(const ElementwiseFiltration& filt, index_t m,
                                                const PrimeField& F) {
    const int maxdim = filt.complex().dimension();
    std::vector<std::vector<std::vector<coeff_t>>> cols(static_cast<std::size_t>(maxdim) + 2);
    std::vector<index_t> count(static_cast<std::size_t>(maxdim) + 1, 0);
    for (index_t j = 0; j < m; ++j) {
        int d = filt.degree_at(j);
        ++count[static_cast<std::size_t>(d)];
        cols[static_cast<std::size_t>(d)].push_back(dense_of(filt.boundary_chain(j, F), m));
    }
    std::vector<index_t> rank(static_cast<std::size_t>(maxdim) + 2, 0);
    for (std::size_t d = 0; d < cols.size(); ++d) rank[d] = dense_rank(cols[d], F);
    std::vector<index_t> betti(static_cast<std::size_t>(maxdim) + 1, 0);
    for (std::size_t d = 0; d <= static_cast<std::size_t>(maxdim); ++d)
        betti[d] = count[d] - rank[d] - rank[d + 1];
    return betti;
}

// --------------------------------------------- brute-force lexicographic minimum

// chains over Z/2 as bitsets indexed by filtration position
struct Bits {
    std::vector<std::uint64_t> w;
    explicit Bits(index_t n = 0) : w((static_cast<std::size_t>(n) + 63) / 64, 0) {}

    void flip_with(const Bits& o) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
    }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    int top_bit() const {  // index of the maximal set bit, -1 if none
        for (std::size_t k = w.size(); k-- > 0;)
            if (w[k]) return static_cast<int>(k * 64 + 63 - std::countl_zero(w[k]));
        return -1;
    }
    bool operator==(const Bits& o) const { return w == o.w; }
};

inline Bits to_bits(const Chain& c, index_t n) {
    Bits b(n);
    for (const auto& e : c.entries())
        b.w[static_cast<std::size_t>(e.index) / 64] |= std::uint64_t(1) << (e.index % 64);
    return b;
}

// supports compared by the maximum of their symmetric difference
inline bool support_lex_less(const Bits& a, const Bits& b) {
    for (std::size_t k = a.w.size(); k-- > 0;) {
        std::uint64_t d = a.w[k] ^ b.w[k];
        if (!d) continue;
        int bit = 63 - std::countl_zero(d);
        return (b.w[k] >> bit) & 1;  // the maximal differing index lies in b
    }
    return false;
}

// independent subset of the given vectors, by xor-elimination on top bits
inline std::vector<Bits> xor_basis(const std::vector<Bits>& vecs) {
    std::vector<Bits> basis;
    for (Bits v : vecs) {
        bool changed = true;
        while (changed && v.any()) {
            changed = false;
            for (const Bits& b : basis)
                if (v.any() && v.top_bit() == b.top_bit()) {
                    v.flip_with(b);
                    changed = true;
                }
        }
        if (v.any()) basis.push_back(v);
    }
    return basis;
}

// lexicographic minimum over z + span(gens), by Gray-code enumeration of the span
inline Bits brute_force_lex_min(const Bits& z, const std::vector<Bits>& gens) {
    std::vector<Bits> basis = xor_basis(gens);
    if (basis.size() > 22) throw std::runtime_error("brute_force_lex_min: span too large");
    Bits cur = z, best = z;
    const std::uint64_t total = std::uint64_t(1) << basis.size();
    for (std::uint64_t i = 1; i < total; ++i) {
        cur.flip_with(basis[static_cast<std::size_t>(std::countr_zero(i))]);
        if (support_lex_less(cur, best)) best = cur;
    }
    return best;
}

// small-field dense variant (any p): minimum-support member of z + span(gens)
inline std::vector<coeff_t> brute_force_lex_min_densep(const std::vector<coeff_t>& z,
                                                       const std::vector<std::vector<coeff_t>>& gens,
                                                       const PrimeField& F) {
    if (gens.size() > 10) throw std::runtime_error("brute_force_lex_min_densep: span too large");
    const std::size_t n = z.size();
    auto less = [&](const std::vector<coeff_t>& a, const std::vector<coeff_t>& b) {
        for (std::size_t k = n; k-- > 0;) {
            bool ina = a[k] != 0, inb = b[k] != 0;
            if (ina != inb) return inb;
        }
        return false;
    };
    std::vector<coeff_t> best = z;
    std::vector<coeff_t> digits(gens.size(), 0);
    for (;;) {
        std::size_t d = 0;
        while (d < digits.size()) {
            digits[d] = (digits[d] + 1) % F.modulus();
            if (digits[d] != 0) break;
            ++d;
        }
        if (d == digits.size()) break;
        std::vector<coeff_t> cand = z;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            if (digits[g] == 0) continue;
            for (std::size_t k = 0; k < n; ++k)
                cand[k] = F.add(cand[k], F.mul(digits[g], gens[g][k]));
        }
        if (less(cand, best)) best = cand;
    }
    return best;
}

// ------------------------------------------------------ double-precision Welzl

struct DBall {
    std::vector<double> c;
    double r2 = -1;  // negative = empty ball containing nothing
};

inline double dist2(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
    return s;
}

// ball through all given points with center in their affine hull (doubles)
inline DBall ball_through(const std::vector<std::vector<double>>& pts) {
    DBall out;
    if (pts.empty()) return out;
    const std::size_t d = pts[0].size(), k = pts.size();
    out.c = pts[0];
    out.r2 = 0;
    if (k == 1) return out;
    std::vector<std::vector<double>> m(k - 1, std::vector<double>(k, 0));  // [A | b]
    std::vector<std::vector<double>> u(k - 1, std::vector<double>(d));
    for (std::size_t i = 0; i + 1 < k; ++i) {
        double n2 = 0;
        for (std::size_t a = 0; a < d; ++a) {
            u[i][a] = pts[i + 1][a] - pts[0][a];
            n2 += u[i][a] * u[i][a];
        }
        m[i][k - 1] = n2;
    }
    for (std::size_t i = 0; i + 1 < k; ++i)
        for (std::size_t j = 0; j + 1 < k; ++j) {
            double dot = 0;
            for (std::size_t a = 0; a < d; ++a) dot += u[i][a] * u[j][a];
            m[i][j] = 2 * dot;
        }
    // partial-pivot elimination on the (k-1) x (k-1) system
    for (std::size_t col = 0; col + 1 < k; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r + 1 < k; ++r)
            if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
        std::swap(m[piv], m[col]);
        if (std::fabs(m[col][col]) < 1e-14) return DBall{};  // affinely dependent
        for (std::size_t r = 0; r + 1 < k; ++r) {
            if (r == col) continue;
            double f = m[r][col] / m[col][col];
            for (std::size_t s = col; s < k; ++s) m[r][s] -= f * m[col][s];
        }
    }
    for (std::size_t i = 0; i + 1 < k; ++i) {
        double x = m[i][k - 1] / m[i][i];
        for (std::size_t a = 0; a < d; ++a) out.c[a] += x * u[i][a];
    }
    out.r2 = dist2(out.c, pts[0]);
    return out;
}

inline DBall welzl_rec(std::vector<std::vector<double>>& pts, std::size_t n,
                       std::vector<std::vector<double>> boundary, std::size_t d) {
    if (n == 0 || boundary.size() == d + 1) return ball_through(boundary);
    const std::vector<double>& p = pts[n - 1];
    DBall b = welzl_rec(pts, n - 1, boundary, d);
    if (b.r2 >= 0 && dist2(p, b.c) <= b.r2 * (1 + 1e-10) + 1e-18) return b;
    boundary.push_back(p);
    return welzl_rec(pts, n - 1, std::move(boundary), d);
}

// smallest enclosing ball by the classic randomized recursion, all doubles
inline DBall welzl_meb(Rng& rng, std::vector<std::vector<double>> pts) {
    std::shuffle(pts.begin(), pts.end(), rng);
    return welzl_rec(pts, pts.size(), {}, pts.empty() ? 0 : pts[0].size());
}

// call fn on every size-k index subset of {0..n-1}, in lexicographic order
template <typename Fn>
inline void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        fn(static_cast<const std::vector<std::size_t>&>(pick));
        bool advanced = false;
        std::size_t j = k;
        while (j-- > 0)
            if (pick[j] + (k - j) < n) {
                ++pick[j];
                for (std::size_t s = j + 1; s < k; ++s) pick[s] = pick[s - 1] + 1;
                advanced = true;
                break;
            }
        if (!advanced) return;
    }
}

// --------------------------------------------------- exact circumball oracle

struct QBall {
    std::vector<mpq_class> c;
    mpq_class r2;
    bool ok = false;
};

// circumball with center in the points' affine hull, solved in exact rationals
// from the input-unit coordinates (independent of the library's predicates)
inline QBall circumball_oracle(const PointCloud& X, const std::vector<index_t>& ids) {
    QBall out;
    const std::size_t d = static_cast<std::size_t>(X.dimension()), k = ids.size();
    if (k == 0 || k > d + 1) return out;
    std::vector<std::vector<mpq_class>> u(k - 1, std::vector<mpq_class>(d));
    for (std::size_t i = 0; i + 1 < k; ++i)
        for (std::size_t a = 0; a < d; ++a)
            u[i][a] = X.coordinate(ids[i + 1], static_cast<int>(a)) -
                      X.coordinate(ids[0], static_cast<int>(a));
    std::vector<std::vector<mpq_class>> m(k - 1, std::vector<mpq_class>(k, 0));
    for (std::size_t i = 0; i + 1 < k; ++i) {
        for (std::size_t j = 0; j + 1 < k; ++j) {
            mpq_class dot = 0;
            for (std::size_t a = 0; a < d; ++a) dot += u[i][a] * u[j][a];
            m[i][j] = 2 * dot;
        }
        mpq_class n2 = 0;
        for (std::size_t a = 0; a < d; ++a) n2 += u[i][a] * u[i][a];
        m[i][k - 1] = n2;
    }
    for (std::size_t col = 0; col + 1 < k; ++col) {
        std::size_t piv = col;
        while (piv + 1 < k && m[piv][col] == 0) ++piv;
        if (piv + 1 >= k) return out;  // singular Gram matrix = affinely dependent
        std::swap(m[piv], m[col]);
        for (std::size_t r = 0; r + 1 < k; ++r) {
            if (r == col || m[r][col] == 0) continue;
            mpq_class f = m[r][col] / m[col][col];
            for (std::size_t s = col; s < k; ++s) m[r][s] -= f * m[col][s];
        }
    }
    out.c.assign(d, 0);
    for (std::size_t a = 0; a < d; ++a) out.c[a] = X.coordinate(ids[0], static_cast<int>(a));
    for (std::size_t i = 0; i + 1 < k; ++i) {
        mpq_class x = m[i][k - 1] / m[i][i];
        for (std::size_t a = 0; a < d; ++a) out.c[a] += x * u[i][a];
    }
    out.r2 = 0;
    for (std::size_t a = 0; a < d; ++a) {
        mpq_class t = out.c[a] - X.coordinate(ids[0], static_cast<int>(a));
        out.r2 += t * t;
    }
    out.ok = true;
    return out;
}

inline mpq_class point_dist2(const PointCloud& X, const std::vector<mpq_class>& c, index_t q) {
    mpq_class s = 0;
    for (int a = 0; a < X.dimension(); ++a) {
        mpq_class t = c[static_cast<std::size_t>(a)] - X.coordinate(q, a);
        s += t * t;
    }
    return s;
}

// no point of X strictly inside (points on the sphere are allowed)
inline bool ball_is_empty(const PointCloud& X, const QBall& b) {
    for (index_t q = 0; q < X.size(); ++q)
        if (point_dist2(X, b.c, q) < b.r2) return false;
    return true;
}

// Smallest empty circumsphere of sigma: the optimum touches some affinely
// independent superset of sigma's vertex set, so minimizing the exact
// circumball radius over all empty supersets is an exhaustive oracle.
inline std::optional<mpq_class> smallest_empty_circumsphere_oracle(const PointCloud& X,
                                                                   std::vector<index_t> sigma) {
    std::sort(sigma.begin(), sigma.end());
    std::vector<index_t> others;
    for (index_t q = 0; q < X.size(); ++q)
        if (!std::binary_search(sigma.begin(), sigma.end(), q)) others.push_back(q);
    const std::size_t room = static_cast<std::size_t>(X.dimension()) + 1 - sigma.size();
    std::optional<mpq_class> best;
    auto consider = [&](const std::vector<index_t>& ids) {
        QBall b = circumball_oracle(X, ids);
        if (!b.ok || !ball_is_empty(X, b)) return;
        if (!best || b.r2 < *best) best = b.r2;
    };
    for (std::size_t t = 0; t <= room; ++t)
        for_each_combination(others.size(), t, [&](const std::vector<std::size_t>& pick) {
            std::vector<index_t> ids = sigma;
            for (std::size_t s : pick) ids.push_back(others[s]);
            consider(ids);
        });
    return best;
}

// Delaunay oracle: closure of all (d+1)-subsets whose circumball is empty
inline SimplicialComplex brute_force_delaunay(const PointCloud& X) {
    const std::size_t n = static_cast<std::size_t>(X.size());
    const std::size_t k = static_cast<std::size_t>(X.dimension()) + 1;
    if (n < k) throw std::runtime_error("brute_force_delaunay: too few points");
    std::vector<Simplex> cells;
    for_each_combination(n, k, [&](const std::vector<std::size_t>& pick) {
        std::vector<index_t> ids(pick.begin(), pick.end());
        QBall b = circumball_oracle(X, ids);
        if (b.ok && ball_is_empty(X, b)) {
            std::vector<vertex_t> vs;
            for (index_t id : ids) vs.push_back(static_cast<vertex_t>(id));
            cells.emplace_back(vs);
        }
    });
    for (index_t q = 0; q < X.size(); ++q) cells.push_back(Simplex({static_cast<vertex_t>(q)}));
    return SimplicialComplex::closure_of(cells);
}

// ------------------------------------------------------- hull measure oracles

inline mpq_class coord(const PointCloud& X, index_t i, int a) { return X.coordinate(i, a); }

// exact 2D convex-hull area by monotone chain + shoelace
inline mpq_class hull_area_oracle(const PointCloud& X) {
    std::vector<index_t> ids(static_cast<std::size_t>(X.size()));
    std::iota(ids.begin(), ids.end(), 0);
    std::sort(ids.begin(), ids.end(), [&](index_t a, index_t b) {
        if (coord(X, a, 0) != coord(X, b, 0)) return coord(X, a, 0) < coord(X, b, 0);
        return coord(X, a, 1) < coord(X, b, 1);
    });
    auto cross = [&](index_t o, index_t a, index_t b) -> mpq_class {
        return (coord(X, a, 0) - coord(X, o, 0)) * (coord(X, b, 1) - coord(X, o, 1)) -
               (coord(X, a, 1) - coord(X, o, 1)) * (coord(X, b, 0) - coord(X, o, 0));
    };
    std::vector<index_t> hull;
    for (int pass = 0; pass < 2; ++pass) {
        std::size_t base = hull.size();
        for (index_t id : ids) {
            while (hull.size() >= base + 2 &&
                   cross(hull[hull.size() - 2], hull[hull.size() - 1], id) <= 0)
                hull.pop_back();
            hull.push_back(id);
        }
        hull.pop_back();
        std::reverse(ids.begin(), ids.end());
    }
    mpq_class area = 0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        index_t a = hull[i], b = hull[(i + 1) % hull.size()];
        area += coord(X, a, 0) * coord(X, b, 1) - coord(X, b, 0) * coord(X, a, 1);
    }
    return abs(area) / 2;
}

inline mpq_class det3(const std::vector<std::vector<mpq_class>>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// exact 3D hull volume: brute-force facets (all other points strictly on one
// side), cones from the centroid
inline mpq_class hull_volume_oracle(const PointCloud& X) {
    const index_t n = X.size();
    std::vector<mpq_class> o(3, 0);
    for (index_t i = 0; i < n; ++i)
        for (int a = 0; a < 3; ++a) o[static_cast<std::size_t>(a)] += coord(X, i, a);
    for (auto& v : o) v /= n;
    auto orient = [&](index_t i, index_t j, index_t k, const std::vector<mpq_class>& p) {
        std::vector<std::vector<mpq_class>> m(3, std::vector<mpq_class>(3));
        for (int a = 0; a < 3; ++a) {
            m[0][static_cast<std::size_t>(a)] = coord(X, j, a) - coord(X, i, a);
            m[1][static_cast<std::size_t>(a)] = coord(X, k, a) - coord(X, i, a);
            m[2][static_cast<std::size_t>(a)] = p[static_cast<std::size_t>(a)] - coord(X, i, a);
        }
        return det3(m);
    };
    mpq_class vol = 0;
    for (index_t i = 0; i < n; ++i)
        for (index_t j = i + 1; j < n; ++j)
            for (index_t k = j + 1; k < n; ++k) {
                int sign = 0;
                bool facet = true;
                for (index_t q = 0; q < n && facet; ++q) {
                    if (q == i || q == j || q == k) continue;
                    std::vector<mpq_class> p(3);
                    for (int a = 0; a < 3; ++a) p[static_cast<std::size_t>(a)] = coord(X, q, a);
                    mpq_class s = orient(i, j, k, p);
                    int sg = sgn(s);
                    if (sg == 0) throw std::runtime_error("hull_volume_oracle: coplanar points");
                    if (sign == 0) sign = sg;
                    else if (sign != sg) facet = false;
                }
                if (facet) vol += abs(orient(i, j, k, o));
            }
    return vol / 6;
}

// exact total measure of the complex's top cells (area in 2D, volume in 3D)
inline mpq_class triangulation_measure_oracle(const SimplicialComplex& K, const PointCloud& X) {
    const int d = X.dimension();
    mpq_class total = 0;
    for (index_t id : K.simplices_of_dimension(d)) {
        const auto& vs = K.simplex(id).vertices();
        if (d == 2) {
            mpq_class det =
                (coord(X, vs[1], 0) - coord(X, vs[0], 0)) * (coord(X, vs[2], 1) - coord(X, vs[0], 1)) -
                (coord(X, vs[1], 1) - coord(X, vs[0], 1)) * (coord(X, vs[2], 0) - coord(X, vs[0], 0));
            total += abs(det) / 2;
        } else {
            std::vector<std::vector<mpq_class>> m(3, std::vector<mpq_class>(3));
            for (int r = 0; r < 3; ++r)
                for (int a = 0; a < 3; ++a)
                    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)] =
                        coord(X, vs[static_cast<std::size_t>(r) + 1], a) - coord(X, vs[0], a);
            total += abs(det3(m)) / 6;
        }
    }
    return total;
}

// ------------------------------------------------ random complexes and values

// downward closure of random top simplices on a small vertex pool
inline SimplicialComplex random_complex(Rng& rng, int n_vertices, int n_top, int max_dim) {
    std::vector<vertex_t> pool(static_cast<std::size_t>(n_vertices));
    std::iota(pool.begin(), pool.end(), 0);
    std::uniform_int_distribution<int> dim_of(1, max_dim);
    std::vector<Simplex> gens;
    for (int t = 0; t < n_top; ++t) {
        std::shuffle(pool.begin(), pool.end(), rng);
        int k = std::min(dim_of(rng) + 1, n_vertices);
        gens.emplace_back(std::vector<vertex_t>(pool.begin(), pool.begin() + k));
    }
    if (gens.empty()) gens.emplace_back(std::vector<vertex_t>{0});
    return SimplicialComplex::closure_of(gens);
}

// strictly monotone injective values: each simplex exceeds the max of its facets
inline std::vector<FiltValue> random_injective_values(Rng& rng, const SimplicialComplex& K) {
    std::uniform_int_distribution<int> step(1, 1 << 20);
    for (int attempt = 0; attempt < 50; ++attempt) {
        std::vector<FiltValue> v(static_cast<std::size_t>(K.size()));
        for (index_t id = 0; id < K.size(); ++id) {
            FiltValue base = 0;
            for (index_t f : K.facets(id)) base = std::max(base, v[static_cast<std::size_t>(f)]);
            v[static_cast<std::size_t>(id)] = base + FiltValue(step(rng), 1 << 20);
        }
        std::vector<FiltValue> sorted = v;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) return v;
    }
    throw std::runtime_error("random_injective_values: could not reach injectivity");
}

// A random generalized discrete Morse function, built interval by interval:
// take the least unassigned simplex rho, either make it critical or grow an
// interval [rho, rho u A] (|A| = 1 or 2) whose members' outside facets are all
// assigned already; each interval gets a fresh value, so the expected interval
// partition is recoverable and monotonicity holds by construction.
struct GdmInstance {
    std::shared_ptr<const SimplicialComplex> complex;
    std::vector<FiltValue> values;                          // by complex id
    std::vector<std::pair<index_t, index_t>> intervals;     // (lower, upper), sorted by lower
};

inline GdmInstance random_gdm(Rng& rng, std::shared_ptr<const SimplicialComplex> K,
                              double critical_prob = 0.35) {
    const SimplicialComplex& C = *K;
    GdmInstance out;
    out.complex = K;
    out.values.assign(static_cast<std::size_t>(C.size()), FiltValue(0));
    std::vector<char> assigned(static_cast<std::size_t>(C.size()), 0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    long value = 0;

    auto outside_facets_assigned = [&](index_t member, index_t lower) {
        const Simplex& rho = C.simplex(lower);
        for (index_t f : C.facets(member)) {
            if (assigned[static_cast<std::size_t>(f)]) continue;
            if (rho.is_face_of(C.simplex(f))) continue;  // inside the candidate interval
            return false;
        }
        return true;
    };

    for (index_t rho = 0; rho < C.size(); ++rho) {
        if (assigned[static_cast<std::size_t>(rho)]) continue;
        std::vector<std::vector<index_t>> candidates;  // members beyond rho itself
        if (coin(rng) >= critical_prob) {
            std::vector<index_t> cofs;
            for (index_t t : C.cofacets(rho))
                if (!assigned[static_cast<std::size_t>(t)] && outside_facets_assigned(t, rho))
                    cofs.push_back(t);
            for (index_t t : cofs) candidates.push_back({t});
            for (std::size_t a = 0; a < cofs.size(); ++a)
                for (std::size_t b = a + 1; b < cofs.size(); ++b) {
                    Simplex top = Simplex::union_of(C.simplex(cofs[a]), C.simplex(cofs[b]));
                    auto top_id = C.id_of(top);
                    if (!top_id || assigned[static_cast<std::size_t>(*top_id)]) continue;
                    if (!outside_facets_assigned(*top_id, rho)) continue;
                    candidates.push_back({cofs[a], cofs[b], *top_id});
                }
        }
        ++value;
        out.values[static_cast<std::size_t>(rho)] = FiltValue(value);
        assigned[static_cast<std::size_t>(rho)] = 1;
        if (candidates.empty()) {
            out.intervals.emplace_back(rho, rho);
            continue;
        }
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        const auto& members = candidates[pick(rng)];
        for (index_t m : members) {
            out.values[static_cast<std::size_t>(m)] = FiltValue(value);
            assigned[static_cast<std::size_t>(m)] = 1;
        }
        out.intervals.emplace_back(rho, members.back());
    }
    return out;
}

// ------------------------------------------------------------- chain helpers

inline index_t position_of(const ElementwiseFiltration& filt, std::initializer_list<vertex_t> vs) {
    auto id = filt.complex().id_of(Simplex(vs));
    if (!id) throw std::runtime_error("position_of: no such simplex");
    return filt.position_of_id(*id);
}

inline Chain make_chain(int degree, std::vector<ChainEntry> entries) {
    return Chain(degree, std::move(entries));
}

inline Chain random_chain(Rng& rng, const std::vector<int>& degrees, int degree,
                          const PrimeField& F) {
    std::uniform_int_distribution<coeff_t> coeff(0, F.modulus() - 1);
    std::vector<ChainEntry> entries;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        if (degrees[i] == degree) {
            coeff_t v = coeff(rng);
            if (v) entries.push_back({static_cast<index_t>(i), v});
        }
    return Chain(degree, std::move(entries));
}

// random combination of the reduction's cycle columns of one degree:
// death columns R_j (boundaries) and essential columns S_i
inline Chain random_cycle(Rng& rng, const ReductionResult& res, int degree) {
    std::uniform_int_distribution<coeff_t> coeff(0, res.field.modulus() - 1);
    Chain z(degree);
    for (const auto& p : res.pairs)
        if (res.filtration->degree_at(p.death) == degree + 1) {
            coeff_t v = coeff(rng);
            if (v) z.add_scaled(res.R.column(p.death), v, res.field);
        }
    for (index_t i : res.essential)
        if (res.filtration->degree_at(i) == degree) {
            coeff_t v = coeff(rng);
            if (v) z.add_scaled(res.S.column(i), v, res.field);
        }
    return z;
}

inline bool is_subcomplex(const SimplicialComplex& inner, const SimplicialComplex& outer) {
    for (const Simplex& s : inner.simplices())
        if (!outer.contains(s)) return false;
    return true;
}

// every simplex in the chain's support (filtration positions) lies in the complex
inline bool support_in_complex(const Chain& c, const ElementwiseFiltration& filt,
                               const SimplicialComplex& K) {
    for (const auto& e : c.entries())
        if (!K.contains(filt.simplex_at(e.index))) return false;
    return true;
}

}  // namespace testutil
