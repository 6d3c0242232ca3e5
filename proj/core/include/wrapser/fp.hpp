// wrapser: arithmetic in the prime field Z/p
#pragma once

#include <wrapser/common.hpp>

#include <vector>

namespace wrapser {

bool is_prime(coeff_t n);

// Residues are plain coeff_t values in [0, p). Inverses come from the usual
// table recurrence inverse[a] = -(p/a) * inverse[p mod a].
class PrimeField {
  public:
    explicit PrimeField(coeff_t p = 2);

    coeff_t modulus() const { return p_; }

    coeff_t add(coeff_t a, coeff_t b) const {
        coeff_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    coeff_t sub(coeff_t a, coeff_t b) const { return a >= b ? a - b : a + p_ - b; }
    coeff_t neg(coeff_t a) const { return a == 0 ? 0 : p_ - a; }
    coeff_t mul(coeff_t a, coeff_t b) const {
        return static_cast<coeff_t>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    coeff_t inv(coeff_t a) const { return inverse_[a]; }

    // reduce a signed integer (e.g. a boundary sign) into [0, p)
    coeff_t from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<coeff_t>(r);
    }

    bool operator==(const PrimeField& other) const { return p_ == other.p_; }

  private:
    coeff_t p_;
    std::vector<coeff_t> inverse_;
};

}  // namespace wrapser
