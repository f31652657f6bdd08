#ifndef PPINV_INTMATH_HPP
#define PPINV_INTMATH_HPP

#include <utility>
#include <vector>

#include "common.hpp"

namespace ppinv {

bool is_prime_u64(u64 n);

// Prime factorization by trial division, (prime, multiplicity) pairs ascending.
std::vector<std::pair<u64, u32>> factorize_u64(u64 n);

u64 euler_phi_u64(u64 n);

u64 mul_mod_u64(u64 a, u64 b, u64 m);
u64 pow_mod_u64(u64 a, u64 e, u64 m);

// g = gcd(a, b) and Bezout coefficients with a*x + b*y = g.
Int egcd(const Int& a, const Int& b, Int& x, Int& y);

// Inverse of a modulo m, in [0, m). Throws not_coprime if gcd(a, m) != 1.
Int mod_inverse(const Int& a, const Int& m);

// a mod m mapped into [0, m).
Int mod_nonneg(const Int& a, const Int& m);

Int factorial(u64 k);

// C(n, k) for non-negative arguments; 0 when k > n.
Int binom_exact(const Int& n, const Int& k);

// Generalized binomial r(r-1)...(r-k+1)/k! for any integer r; 0 when k < 0.
Int binom_generalized(const Int& r, i64 k);

// Base-p expansion, low-to-high, no trailing zeros (zero -> empty digits).
struct BasePDigits {
    u64 p;
    std::vector<u32> digits;
};

BasePDigits base_p_digits(Int n, u64 p);

} // namespace ppinv

#endif
