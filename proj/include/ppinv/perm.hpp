#ifndef PPINV_PERM_HPP
#define PPINV_PERM_HPP

#include <string>

#include "poly.hpp"

namespace ppinv {

enum class InverseMethod { lagrange, coeff_formula, closed_form };

/// An inverse polynomial plus provenance and verification status. When
/// verified is true, the composition identity g(f(c)) = c held exhaustively
/// for the polynomial this was produced from.
struct InverseResult {
    Poly inverse;
    InverseMethod method;
    std::string closed_form_name; // set for closed_form results
    bool verified = false;

    std::string method_string() const;
};

/// True iff f induces a bijection of F_q.
bool is_permutation(const Poly& f);

/// True iff g(f(c)) = c for every c in F_q (pointwise, not symbolic).
bool verify_inverse(const Poly& f, const Poly& g);

/// Interpolates the pairs (f(c), c). The project-wide brute-force oracle.
InverseResult invert_lagrange(const Poly& f);

/// Generic coefficient-formula inverse: the inverse of a permutation f with
/// f(0) = 0 is sum_i b_i x^i where b_i is the coefficient of x^{q-2} in
/// f^{q-1-i} mod x^q - x. Computes f^e incrementally, one multiplication per
/// exponent. Requires q >= 3.
InverseResult invert_coeff_formula(const Poly& f);

/// Coefficient-formula inverse extended to f(0) != 0 by conjugating with the
/// translation d = -f(0): the inverse of f(x) + d is f^{-1}(x - d).
InverseResult invert_coeff_formula_shifted(const Poly& f);

/// All normalized polynomials of degree 1..max_degree that permute F_q, in
/// canonical coefficient order (degree ascending, then lexicographic).
std::vector<Poly> classify_normalized_pps(const Field& f, u32 max_degree,
                                          u64 candidate_cap = u64(1) << 20);

} // namespace ppinv

#endif
