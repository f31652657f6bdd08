#include "ppinv/intmath.hpp"

namespace ppinv {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::not_prime: return "NotPrime";
    case Errc::size_exceeded: return "SizeExceeded";
    case Errc::spec_mismatch: return "SpecMismatch";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::not_a_divisor: return "NotADivisor";
    case Errc::zero_input: return "ZeroInput";
    case Errc::duplicate_point: return "DuplicatePoint";
    case Errc::incomplete_domain: return "IncompleteDomain";
    case Errc::not_a_permutation: return "NotAPermutation";
    case Errc::nonzero_constant_term: return "NonzeroConstantTerm";
    case Errc::field_too_small: return "FieldTooSmall";
    case Errc::not_coprime: return "NotCoprime";
    case Errc::zero_leading_coefficient: return "ZeroLeadingCoefficient";
    case Errc::consistency_failure: return "ConsistencyFailure";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::characteristic_divides_d: return "CharacteristicDividesD";
    case Errc::denominator_zero: return "DenominatorZero";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (u64 d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::vector<std::pair<u64, u32>> factorize_u64(u64 n) {
    std::vector<std::pair<u64, u32>> out;
    for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d) continue;
        u32 e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

u64 euler_phi_u64(u64 n) {
    u64 r = n;
    for (auto [p, e] : factorize_u64(n)) r = r / p * (p - 1);
    return r;
}

u64 mul_mod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 pow_mod_u64(u64 a, u64 e, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod_u64(r, a, m);
        a = mul_mod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

Int egcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int old_r = a, r = b;
    Int old_x = 1, cur_x = 0;
    Int old_y = 0, cur_y = 1;
    while (r != 0) {
        Int qt = old_r / r;
        Int t = old_r - qt * r;
        old_r = r;
        r = t;
        t = old_x - qt * cur_x;
        old_x = cur_x;
        cur_x = t;
        t = old_y - qt * cur_y;
        old_y = cur_y;
        cur_y = t;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    x = old_x;
    y = old_y;
    return old_r;
}

Int mod_inverse(const Int& a, const Int& m) {
    Int x, y;
    Int g = egcd(a, m, x, y);
    if (g != 1) fail(Errc::not_coprime, "no inverse of " + a.str() + " modulo " + m.str());
    return mod_nonneg(x, m);
}

Int mod_nonneg(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

Int factorial(u64 k) {
    Int r = 1;
    for (u64 i = 2; i <= k; ++i) r *= i;
    return r;
}

Int binom_exact(const Int& n, const Int& k) {
    if (k < 0 || k > n) return 0;
    Int kk = k;
    if (n - k < kk) kk = n - k;
    Int r = 1;
    for (Int i = 1; i <= kk; ++i) {
        r *= n - kk + i;
        r /= i; // exact at every step
    }
    return r;
}

Int binom_generalized(const Int& r, i64 k) {
    if (k < 0) return 0;
    Int num = 1;
    for (i64 i = 0; i < k; ++i) num *= r - i;
    return num / factorial(static_cast<u64>(k));
}

BasePDigits base_p_digits(Int n, u64 p) {
    if (p < 2) fail(Errc::invalid_argument, "base must be >= 2");
    if (n < 0) fail(Errc::invalid_argument, "negative value has no base-p expansion");
    BasePDigits out{p, {}};
    while (n > 0) {
        out.digits.push_back(static_cast<u32>(n % p));
        n /= p;
    }
    return out;
}

} // namespace ppinv
