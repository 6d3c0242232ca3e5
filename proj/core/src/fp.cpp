#include <wrapser/fp.hpp>

namespace wrapser {

bool is_prime(coeff_t n) {
    if (n < 2) return false;
    for (coeff_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(coeff_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("field modulus must be prime: " + std::to_string(p));
    inverse_.resize(p);
    inverse_[1 % p] = 1 % p;
    for (coeff_t a = 2; a < p; ++a)
        inverse_[a] = mul(p - p / a, inverse_[p % a]);
}

}  // namespace wrapser
