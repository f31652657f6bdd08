#ifndef PPINV_POLY_HPP
#define PPINV_POLY_HPP

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "field.hpp"

namespace ppinv {

/// Dense polynomial over a field: coefficient element-indices low-to-high,
/// no trailing zeros (zero polynomial = empty vector).
class Poly {
public:
    explicit Poly(const Field& f) : f_(&f) {}
    Poly(const Field& f, std::vector<u32> coeff_indices) : f_(&f), c_(std::move(coeff_indices)) { trim(); }

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly from_ints(const Field& f, std::span<const i64> coeffs);
    static Poly from_ints(const Field& f, std::initializer_list<i64> coeffs);
    static Poly from_elements(const Field& f, std::span<const FieldElement> coeffs);
    /// c * x^e with e already in range (no reduction applied).
    static Poly monomial(const Field& f, const FieldElement& c, u64 e);

    const Field& field() const { return *f_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    i64 degree() const { return static_cast<i64>(c_.size()) - 1; }
    FieldElement coeff(u64 i) const { return {*f_, i < c_.size() ? c_[i] : 0}; }
    FieldElement leading_coeff() const;
    const std::vector<u32>& coeff_indices() const { return c_; }

    /// Adds c * x^e in place (no reduction of e).
    void add_term(const FieldElement& c, u64 e);

    friend bool operator==(const Poly& a, const Poly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    const Field* f_;
    std::vector<u32> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly scale(const Poly& a, const FieldElement& s);

/// Exponent image under reduction mod x^q - x: 0 -> 0, else ((e-1) mod (q-1)) + 1.
u64 reduce_exponent(const Int& e, u64 q);

/// The unique representative of degree <= q-1 inducing the same function on F_q.
Poly reduce_mod_xq_minus_x(const Poly& f);

/// c * x^e reduced mod x^q - x (e arbitrary precision).
Poly reduced_monomial(const Field& f, const FieldElement& c, const Int& e);

/// f^e mod x^q - x by square-and-multiply, reducing after each product.
Poly powmod(const Poly& f, const Int& e);

FieldElement evaluate(const Poly& f, const FieldElement& c);

/// f(g(x)) mod x^q - x.
Poly compose_mod(const Poly& f, const Poly& g);

/// Unique interpolant of degree <= q-1 through exactly q pairs whose first
/// components exhaust F_q. Newton divided-difference form.
Poly lagrange_interpolate(const Field& f, std::span<const std::pair<FieldElement, FieldElement>> pairs);

/// Record of g(x) = b*f(x+c) + d.
struct NormalizeTransform {
    FieldElement b, c, d;
};

/// Substitution f(x + c).
Poly shift_argument(const Poly& f, const FieldElement& c);

/// Normalized form of f (monic, g(0) = 0, and when char does not divide
/// deg f, zero coefficient on x^{deg-1}) together with the transform used.
std::pair<Poly, NormalizeTransform> normalize(const Poly& f);

} // namespace ppinv

#endif
