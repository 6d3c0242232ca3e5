#include <wrapser/predicates.hpp>

#include <wrapser/geometry.hpp>

#include <cmath>
#include <limits>

namespace wrapser {

namespace {

const double kInf = std::numeric_limits<double>::infinity();

double down(double v) { return std::nextafter(v, -kInf); }
double up(double v) { return std::nextafter(v, kInf); }

}  // namespace

Interval Interval::of_mpz(const mpz_class& v) {
    double d = v.get_d();  // truncated toward zero, error < 1 ulp
    if (mpz_sizeinbase(v.get_mpz_t(), 2) <= 53) return {d, d};
    return {down(d), up(d)};
}

Interval Interval::of_mpq(const mpq_class& v) {
    double d = v.get_d();
    return {down(d), up(d)};
}

Interval Interval::operator+(const Interval& o) const { return {down(lo + o.lo), up(hi + o.hi)}; }
Interval Interval::operator-(const Interval& o) const { return {down(lo - o.hi), up(hi - o.lo)}; }

Interval Interval::operator*(const Interval& o) const {
    double a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {down(std::min(std::min(a, b), std::min(c, d))),
            up(std::max(std::max(a, b), std::max(c, d)))};
}

Interval Interval::squared() const {
    if (lo >= 0) return {down(lo * lo), up(hi * hi)};
    if (hi <= 0) return {down(hi * hi), up(lo * lo)};
    double m = std::max(-lo, hi);
    return {0.0, up(m * m)};
}

namespace {

// determinant of a 2x2 or 3x3 matrix, generic over the scalar type
template <typename T>
T det2(const T m[2][2]) {
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

template <typename T>
T det3(const T m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

template <typename T, typename CoordAt>
T orientation_det(int d, const std::vector<index_t>& ids, CoordAt at) {
    if (d == 2) {
        T m[2][2];
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) m[r][c] = at(ids[r + 1], c) - at(ids[0], c);
        return det2(m);
    }
    T m[3][3];
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m[r][c] = at(ids[r + 1], c) - at(ids[0], c);
    return det3(m);
}

}  // namespace

int orientation(const PointCloud& X, const std::vector<index_t>& ids) {
    const int d = X.dimension();
    if (static_cast<int>(ids.size()) != d + 1)
        throw std::invalid_argument("orientation: expected d+1 points");
    Interval approx = orientation_det<Interval>(
        d, ids, [&](index_t i, int k) { return Interval{X.scaled_lo(i, k), X.scaled_hi(i, k)}; });
    if (approx.decided()) return approx.sign_or_zero();
    mpz_class exact =
        orientation_det<mpz_class>(d, ids, [&](index_t i, int k) { return X.scaled_coord(i, k); });
    return sgn(exact);
}

bool affinely_independent(const PointCloud& X, const std::vector<index_t>& ids) {
    const int d = X.dimension();
    const int m = static_cast<int>(ids.size());
    if (m < 1 || m > d + 1) throw std::invalid_argument("affinely_independent: 1..d+1 points");
    if (m == 1) return true;
    if (m == d + 1) return orientation(X, ids) != 0;
    // Gram determinant of the difference vectors: zero iff dependent
    std::vector<std::vector<mpz_class>> G(m - 1, std::vector<mpz_class>(m - 1));
    for (int a = 1; a < m; ++a)
        for (int b = 1; b < m; ++b) {
            mpz_class dot = 0;
            for (int k = 0; k < d; ++k)
                dot += (X.scaled_coord(ids[a], k) - X.scaled_coord(ids[0], k)) *
                       (X.scaled_coord(ids[b], k) - X.scaled_coord(ids[0], k));
            G[a - 1][b - 1] = dot;
        }
    if (m - 1 == 1) return G[0][0] != 0;
    mpz_class m2[2][2] = {{G[0][0], G[0][1]}, {G[1][0], G[1][1]}};
    mpz_class detG = det2(m2);
    return detG != 0;
}

ScaledBall circumball_scaled(const PointCloud& X, const std::vector<index_t>& ids) {
    const int d = X.dimension();
    const int m = static_cast<int>(ids.size());
    if (m < 1 || m > d + 1) throw std::invalid_argument("circumball: 1..d+1 points");

    // Solve for c = p0 + sum_a t_a (p_a - p0) with 2 (p_a - p0).(c - p0) = |p_a - p0|^2,
    // i.e. the Gram system G t = rhs with G_ab = 2 (p_a-p0).(p_b-p0).
    const int k = m - 1;
    std::vector<std::vector<mpq_class>> A(k, std::vector<mpq_class>(k + 1));
    for (int a = 0; a < k; ++a) {
        mpz_class norm = 0;
        for (int c = 0; c < d; ++c) {
            mpz_class diff = X.scaled_coord(ids[a + 1], c) - X.scaled_coord(ids[0], c);
            norm += diff * diff;
        }
        for (int b = 0; b < k; ++b) {
            mpz_class dot = 0;
            for (int c = 0; c < d; ++c)
                dot += (X.scaled_coord(ids[a + 1], c) - X.scaled_coord(ids[0], c)) *
                       (X.scaled_coord(ids[b + 1], c) - X.scaled_coord(ids[0], c));
            A[a][b] = mpq_class(2 * dot);
        }
        A[a][k] = mpq_class(norm);
    }

    // Gaussian elimination with exact pivoting
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    for (int col = 0; col < k; ++col) {
        int piv = -1;
        for (int r = col; r < k; ++r)
            if (A[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) {
            std::string pts;
            for (index_t id : ids) pts += (pts.empty() ? "" : ",") + std::to_string(id);
            throw DegeneracyError("affinely dependent points: ids {" + pts + "}");
        }
        std::swap(A[col], A[piv]);
        for (int r = col + 1; r < k; ++r) {
            if (A[r][col] == 0) continue;
            mpq_class f = A[r][col] / A[col][col];
            for (int c = col; c <= k; ++c) A[r][c] -= f * A[col][c];
        }
    }
    std::vector<mpq_class> t(k);
    for (int r = k - 1; r >= 0; --r) {
        mpq_class s = A[r][k];
        for (int c = r + 1; c < k; ++c) s -= A[r][c] * t[c];
        t[r] = s / A[r][r];
    }

    ScaledBall ball;
    ball.center.resize(d);
    for (int c = 0; c < d; ++c) {
        mpq_class x(X.scaled_coord(ids[0], c));
        for (int a = 0; a < k; ++a)
            x += t[a] * mpq_class(X.scaled_coord(ids[a + 1], c) - X.scaled_coord(ids[0], c));
        x.canonicalize();
        ball.center[c] = x;
    }
    mpq_class r2 = 0;
    for (int c = 0; c < d; ++c) {
        mpq_class diff = ball.center[c] - mpq_class(X.scaled_coord(ids[0], c));
        r2 += diff * diff;
    }
    r2.canonicalize();
    ball.squared_radius = r2;

    ball.center_iv.resize(d);
    for (int c = 0; c < d; ++c) ball.center_iv[c] = Interval::of_mpq(ball.center[c]);
    ball.r2_iv = Interval::of_mpq(ball.squared_radius);
    return ball;
}

int ball_side(const PointCloud& X, const ScaledBall& ball, index_t q) {
    const int d = X.dimension();
    // filter: |q - c|^2 - r^2 in interval arithmetic
    Interval acc = Interval::exact(0.0);
    for (int k = 0; k < d; ++k) {
        Interval qk{X.scaled_lo(q, k), X.scaled_hi(q, k)};
        acc = acc + (qk - ball.center_iv[k]).squared();
    }
    Interval diff = acc - ball.r2_iv;
    if (diff.decided()) return diff.lo > 0 ? -1 : 1;

    mpq_class exact = 0;
    for (int k = 0; k < d; ++k) {
        mpq_class dq = mpq_class(X.scaled_coord(q, k)) - ball.center[k];
        exact += dq * dq;
    }
    exact -= ball.squared_radius;
    int s = sgn(exact);
    return s > 0 ? -1 : (s < 0 ? 1 : 0);
}

}  // namespace wrapser
