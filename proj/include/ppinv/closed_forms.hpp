#ifndef PPINV_CLOSED_FORMS_HPP
#define PPINV_CLOSED_FORMS_HPP

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "perm.hpp"

namespace ppinv {

// ---- linear and monomial permutations ----

/// Inverse of ax + b: a^{-1}(x - b).
Poly invert_linear(const FieldElement& a, const FieldElement& b);

/// Inverse of x^m on F_q when gcd(m, q-1) = 1: x^{(aq-a+1)/m} with
/// a = -(q-1)^{phi(m)-1} mod m. Throws NotCoprime otherwise.
Poly invert_monomial(u64 m, const Field& f);

// ---- Dickson polynomials of the first kind ----

struct DicksonParams {
    u64 n; // degree
    FieldElement a;
};

/// D_n(x, a) = sum_{i <= n/2} n/(n-i) * C(n-i, i) * (-a)^i x^{n-2i}, with the
/// integer coefficients computed exactly before field reduction. Unreduced.
Poly dickson_poly(const DicksonParams& params, const Field& f);

/// Inverse of D_n(x, a) on F_q: D_m(x, a^n) with mn = 1 mod q^2-1, reduced.
/// Requires gcd(n, q^2 - 1) = 1.
Poly invert_dickson(const DicksonParams& params, const Field& f);

// ---- linearized binomials x^{Q^r} - a x ----

/// Inverse of L(x) = x^{Q^r} - a x on F_{p^n}, where Q = p^base_exp and
/// base_exp | n. Permutation iff the norm of a into F_{Q^d} (d = gcd(n/base_exp, r))
/// differs from 1; throws NotAPermutation when it equals 1.
Poly invert_linearized_binomial(u64 r, const FieldElement& a, u32 base_exp);

// ---- linearized trinomials x^4 + b x^2 + a x over F_{2^n} ----

/// The sequence S_{-1} = 0, S_0 = 1, S_i = b^{2^{i-1}} S_{i-1} + a^{2^{i-1}} S_{i-2},
/// cross-checked against the equivalent form S_i = b S_{i-1}^2 + a^2 S_{i-2}^4
/// at every step. z() = S_n + a S_{n-2}^2 is always 0 or 1.
struct SSequence {
    FieldElement a, b;
    u32 n;
    std::vector<FieldElement> values; // S_{-1} .. S_n

    FieldElement at(i64 i) const; // i in [-1, n]
    FieldElement z() const;
};

SSequence s_sequence(const FieldElement& a, const FieldElement& b, u32 n);

/// Inverse of L(x) = x^4 + b x^2 + a x on F_{2^n} (ab != 0). Permutation iff
/// S_n + a S_{n-2}^2 = 1.
Poly invert_linearized_trinomial(const FieldElement& a, const FieldElement& b);

struct TrinomialPpCount {
    u64 exhaustive; // pairs (a, b) in F_{2^n}* x F_{2^n}* with S_n + a S_{n-2}^2 = 1
    u64 formula;    // (2^n - 1)(2^n - (-1)^n)/3
};

TrinomialPpCount count_trinomial_pps(u32 n);

// ---- the quintic family x^5 - 2a x^3 + a^2 x over F_{5^n} ----

/// f(x) = x^5 - 2a x^3 + a^2 x; permutes F_{5^n} iff a^{(q-1)/2} = -1.
Poly quintic_pp(const FieldElement& a);

/// Polynomial inverse of the quintic family:
/// sum over 0 <= i <= j <= n-1 of b_ij a^{-(5^n+5^{i+1}+5^{j+1}-3)/4} x^{(5^n+5^i+5^j-1)/2}
/// with b_ij = 1 for i < j and 3 for i = j.
Poly invert_quintic_main(const FieldElement& a);

/// Pointwise inverse of the quintic family, the rational-expression form;
/// agrees with evaluate(invert_quintic_main(a), x) at every point.
FieldElement quintic_pointwise(const FieldElement& a, const FieldElement& x);

// ---- generalized cyclotomic mapping permutations ----

/// Data for f(x) = (1/d) sum_{i,j} a_i w^{-ij} x^{r_i + js}, q-1 = d*s,
/// w a primitive d-th root of unity, a_i nonzero, 1 <= r_i < s.
struct CyclotomicSpec {
    u64 d = 1, s = 1;
    FieldElement omega;
    std::vector<FieldElement> a;
    std::vector<u64> r;

    const Field& field() const { return omega.field(); }
};

/// Structural validation; throws on violated invariants.
void validate_cyclotomic(const CyclotomicSpec& spec);

/// Permutation criterion: gcd(prod r_i, s) = 1 and {a_i^s w^{i r_i}} = U_d.
bool cyclotomic_is_pp(const CyclotomicSpec& spec);

/// The forward mapping defined by the branch data, as a reduced polynomial.
Poly cyclotomic_forward(const CyclotomicSpec& spec);

/// Inverse map: (1/d) sum_{i,j} w^{i(t_i - j r_i)} (x/a_i)^{rt_i + js} where
/// r_i rt_i + s t_i = 1 and 1 <= rt_i < s.
Poly invert_cyclotomic(const CyclotomicSpec& spec);

// ---- Dickson matrix criterion for linearized polynomials ----

/// L(x) = sum coeffs[i] x^{Q^i} with Q = p^base_exp; requires base_exp | n and
/// coeffs.size() = n / base_exp.
Poly linearized_to_poly(std::span<const FieldElement> coeffs, u32 base_exp);

/// The associated n_t x n_t Dickson matrix, entry (i, j) = a_{(j-i) mod n_t}^{Q^i}.
std::vector<std::vector<FieldElement>> dickson_matrix(std::span<const FieldElement> coeffs, u32 base_exp);

FieldElement field_matrix_det(std::vector<std::vector<FieldElement>> m);

/// Permutation criterion: det of the Dickson matrix is nonzero.
bool linearized_is_permutation(std::span<const FieldElement> coeffs, u32 base_exp);

// ---- the Table 1 catalog of normalized permutation polynomials ----

struct Table1Row {
    std::string id;        // stable identifier, e.g. "table1.x5-2ax3-a2x"
    std::string pattern;   // display form, e.g. "x^5 - 2a x^3 + a^2 x"
    std::string condition; // display condition, e.g. "a not a square, q = 5^n"
    u32 degree = 0;
    u32 num_params = 0;

    std::function<bool(const Field&)> field_admissible;
    // assumes the field is admissible
    std::function<bool(const Field&, std::span<const FieldElement>)> params_admissible;
    std::function<Poly(const Field&, std::span<const FieldElement>)> build_pp;
    std::function<Poly(const Field&, std::span<const FieldElement>)> build_inverse;
    // reads parameter candidates off a normalized polynomial; the caller
    // still validates admissibility and rebuilds for an exact match
    std::function<std::optional<std::vector<FieldElement>>(const Field&, const Poly&)> extract_params;
};

const std::vector<Table1Row>& table1_catalog();
const Table1Row* table1_find(std::string_view id);

/// All admissible parameter tuples of a row over a field (empty when the
/// field itself is inadmissible; a single empty tuple for parameterless rows).
std::vector<std::vector<FieldElement>> table1_admissible_params(const Table1Row& row, const Field& f);

/// Matches a normalized polynomial against a row; returns the parameters if
/// build_pp reproduces it exactly.
std::optional<std::vector<FieldElement>> table1_match(const Table1Row& row, const Poly& normalized);

// ---- dispatch ----

/// Catalog pattern-match (after normalization) first, then the coefficient
/// formula; composition identity checked in all cases.
InverseResult invert_auto(const Poly& f);

/// Inverse via one specific catalog row; throws InvalidArgument when the row
/// does not apply to this polynomial or field.
InverseResult invert_closed_form(const Poly& f, std::string_view row_id);

} // namespace ppinv

#endif
