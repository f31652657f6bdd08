#ifndef PPINV_BINOM_HPP
#define PPINV_BINOM_HPP

#include <array>
#include <optional>
#include <string>

#include "field.hpp"

namespace ppinv {

/// C(n, k) mod p by the Lucas digit product, with C(0,0) = 1 and digit-wise
/// C(n_i, k_i) = 0 whenever k_i > n_i.
u32 lucas_binom_mod_p(const Int& n, const Int& k, u32 p);

/// Checks C(q+r, k) = C(r, k) mod p for a prime power q = p^e and
/// 0 <= k <= q-1, with the generalized binomial for negative r. Returns the
/// comparison (a property-test hook; the congruence always holds).
bool binom_shift_check(u64 q, const Int& r, u64 k);

/// C(5m+3, m) mod 5, plus the decomposition m = sum (5^{k_i}-1)/4 with
/// k_1 <= k_2 <= k_3 <= n that exists exactly when the value is nonzero.
struct QuinticBinomA {
    u32 value;
    std::optional<std::array<u32, 3>> decomposition;
};

QuinticBinomA quintic_binom_A(u64 m, u32 n);

/// The four ingredients e_{mk} = C(2q-4m-4, k(q-1)/2+m) (-1)^{k+m} a^{-5m-2}
/// of the quintic inverse coefficient, with T in both of its stated forms.
struct EmkTable {
    u64 q;
    u64 T; // (q-5)/10 = (5^{n-1}-1)/2
    u64 m;
    std::array<FieldElement, 4> e;
};

EmkTable emk_table(const FieldElement& a, u64 m);

/// Coefficient of x^i in the inverse of x^5 - 2a x^3 + a^2 x, evaluated via
/// the e_{mk} branch structure. Even i yields zero (the parity branch).
FieldElement quintic_coeff_via_emk(const FieldElement& a, const Int& i);

// ---- congruence reports ----

struct ReportLine {
    std::string id;
    i64 lo = 0, hi = 0;
    u64 pass = 0, fail = 0;
    bool skipped = false;
    std::string note; // skip reason or first counterexample
};

struct Report {
    u32 n = 0;
    std::vector<ReportLine> lines;

    bool all_pass() const;
    std::string to_text() const; // "THEOREM <id> n=<n> range=<lo>..<hi> pass=<p> fail=<f>"
};

/// Sweeps every stated congruence of the machinery (the four e_{mk}
/// reductions and the derived corollaries) over its full m-range for q = 5^n,
/// evaluating each binomial along two independent paths: the Lucas digit
/// product and an exact big-integer binomial reduced mod 5.
Report congruence_suite(u32 n);

/// Checks the three-way equivalences (Lucas non-vanishing, digit-chain
/// condition, closed-form decomposition) of the nonvanishing theorems.
Report theorem_predicate_equivalences(u32 n);

} // namespace ppinv

#endif
