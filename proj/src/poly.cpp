#include "ppinv/poly.hpp"

#include "ppinv/intmath.hpp"

namespace ppinv {

namespace {
void check_same(const Poly& a, const Poly& b) {
    if (&a.field() != &b.field()) fail(Errc::spec_mismatch, "polynomials over different fields");
}
void check_same(const Poly& a, const FieldElement& c) {
    if (&a.field() != &c.field()) fail(Errc::spec_mismatch, "element from a different field");
}
} // namespace

Poly Poly::from_ints(const Field& f, std::span<const i64> coeffs) {
    std::vector<u32> idx(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) idx[i] = f.from_int(coeffs[i]).index();
    return Poly(f, std::move(idx));
}

Poly Poly::from_ints(const Field& f, std::initializer_list<i64> coeffs) {
    return from_ints(f, std::span<const i64>(coeffs.begin(), coeffs.size()));
}

Poly Poly::from_elements(const Field& f, std::span<const FieldElement> coeffs) {
    std::vector<u32> idx(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (&coeffs[i].field() != &f) fail(Errc::spec_mismatch, "coefficient from a different field");
        idx[i] = coeffs[i].index();
    }
    return Poly(f, std::move(idx));
}

Poly Poly::monomial(const Field& f, const FieldElement& c, u64 e) {
    if (&c.field() != &f) fail(Errc::spec_mismatch, "coefficient from a different field");
    if (c.is_zero()) return Poly(f);
    std::vector<u32> idx(e + 1, 0);
    idx[e] = c.index();
    return Poly(f, std::move(idx));
}

FieldElement Poly::leading_coeff() const {
    if (c_.empty()) return {*f_, 0};
    return {*f_, c_.back()};
}

void Poly::add_term(const FieldElement& c, u64 e) {
    if (&c.field() != f_) fail(Errc::spec_mismatch, "coefficient from a different field");
    if (c.is_zero()) return;
    if (c_.size() <= e) c_.resize(e + 1, 0);
    c_[e] = f_->add_idx(c_[e], c.index());
    trim();
}

Poly operator+(const Poly& a, const Poly& b) {
    check_same(a, b);
    const Field& f = a.field();
    std::vector<u32> out(std::max(a.coeff_indices().size(), b.coeff_indices().size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        u32 x = i < a.coeff_indices().size() ? a.coeff_indices()[i] : 0;
        u32 y = i < b.coeff_indices().size() ? b.coeff_indices()[i] : 0;
        out[i] = f.add_idx(x, y);
    }
    return Poly(f, std::move(out));
}

Poly operator-(const Poly& a) {
    const Field& f = a.field();
    std::vector<u32> out(a.coeff_indices().size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = f.neg_idx(a.coeff_indices()[i]);
    return Poly(f, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    check_same(a, b);
    const Field& f = a.field();
    if (a.is_zero() || b.is_zero()) return Poly(f);
    const auto& ca = a.coeff_indices();
    const auto& cb = b.coeff_indices();
    std::vector<u32> out(ca.size() + cb.size() - 1, 0);
    for (size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0) continue;
        for (size_t j = 0; j < cb.size(); ++j) {
            if (cb[j] == 0) continue;
            out[i + j] = f.add_idx(out[i + j], f.mul_idx(ca[i], cb[j]));
        }
    }
    return Poly(f, std::move(out));
}

Poly scale(const Poly& a, const FieldElement& s) {
    check_same(a, s);
    const Field& f = a.field();
    if (s.is_zero()) return Poly(f);
    std::vector<u32> out(a.coeff_indices().size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = f.mul_idx(a.coeff_indices()[i], s.index());
    return Poly(f, std::move(out));
}

u64 reduce_exponent(const Int& e, u64 q) {
    if (e < 0) fail(Errc::invalid_argument, "negative monomial exponent");
    if (e == 0) return 0;
    Int r = (e - 1) % Int(q - 1);
    return static_cast<u64>(r) + 1;
}

Poly reduce_mod_xq_minus_x(const Poly& f) {
    const Field& fld = f.field();
    const u64 q = fld.q();
    if (f.coeff_indices().size() <= q) return f;
    std::vector<u32> out(q, 0);
    const auto& c = f.coeff_indices();
    for (size_t e = 0; e < c.size(); ++e) {
        if (c[e] == 0) continue;
        u64 r = e < q ? e : (e - 1) % (q - 1) + 1;
        out[r] = fld.add_idx(out[r], c[e]);
    }
    return Poly(fld, std::move(out));
}

Poly reduced_monomial(const Field& f, const FieldElement& c, const Int& e) {
    if (c.is_zero()) return Poly(f);
    return Poly::monomial(f, c, reduce_exponent(e, f.q()));
}

Poly powmod(const Poly& f, const Int& e) {
    if (e < 0) fail(Errc::invalid_argument, "negative polynomial power");
    const Field& fld = f.field();
    Poly result = Poly::from_ints(fld, {1});
    Poly base = reduce_mod_xq_minus_x(f);
    Int k = e;
    while (k > 0) {
        if ((k & 1) != 0) result = reduce_mod_xq_minus_x(result * base);
        k >>= 1;
        if (k > 0) base = reduce_mod_xq_minus_x(base * base);
    }
    return result;
}

FieldElement evaluate(const Poly& f, const FieldElement& c) {
    check_same(f, c);
    const Field& fld = f.field();
    const auto& co = f.coeff_indices();
    u32 acc = 0;
    for (size_t i = co.size(); i-- > 0;) acc = fld.add_idx(fld.mul_idx(acc, c.index()), co[i]);
    return {fld, acc};
}

Poly compose_mod(const Poly& f, const Poly& g) {
    check_same(f, g);
    const Field& fld = f.field();
    Poly acc(fld);
    const auto& co = f.coeff_indices();
    for (size_t i = co.size(); i-- > 0;) {
        acc = reduce_mod_xq_minus_x(acc * g);
        acc.add_term(FieldElement(fld, co[i]), 0);
    }
    return acc;
}

Poly lagrange_interpolate(const Field& f, std::span<const std::pair<FieldElement, FieldElement>> pairs) {
    const u64 q = f.q();
    if (pairs.size() != q) fail(Errc::incomplete_domain, "interpolation requires exactly q pairs");
    std::vector<bool> seen(q, false);
    for (const auto& [x, y] : pairs) {
        if (&x.field() != &f || &y.field() != &f) fail(Errc::spec_mismatch, "pair from a different field");
        if (seen[x.index()]) fail(Errc::duplicate_point, "duplicate interpolation node");
        seen[x.index()] = true;
    }

    // Newton coefficients by divided differences.
    std::vector<u32> xs(q), dd(q);
    for (u64 i = 0; i < q; ++i) {
        xs[i] = pairs[i].first.index();
        dd[i] = pairs[i].second.index();
    }
    for (u64 level = 1; level < q; ++level) {
        for (u64 i = q - 1; i >= level; --i) {
            u32 num = f.sub_idx(dd[i], dd[i - 1]);
            u32 den = f.sub_idx(xs[i], xs[i - level]);
            dd[i] = f.mul_idx(num, f.inv_idx(den));
        }
    }

    // Expand: result = dd[q-1]; result = result*(x - x_i) + dd[i] downward.
    std::vector<u32> res(q, 0);
    u64 len = 0;
    for (u64 i = q; i-- > 0;) {
        // multiply res (length len) by (x - xs[i])
        u32 neg_xi = f.neg_idx(xs[i]);
        for (u64 k = len; k-- > 0;) {
            u32 v = res[k];
            res[k + 1] = f.add_idx(res[k + 1], v);
            res[k] = f.mul_idx(v, neg_xi);
        }
        if (len < q) ++len;
        res[0] = f.add_idx(res[0], dd[i]);
    }
    return Poly(f, std::move(res));
}

Poly shift_argument(const Poly& f, const FieldElement& c) {
    check_same(f, c);
    const Field& fld = f.field();
    if (c.is_zero()) return f;
    // Horner in (x + c): acc = acc*(x + c) + a_i
    Poly acc(fld);
    const auto& co = f.coeff_indices();
    for (size_t i = co.size(); i-- > 0;) {
        // acc * (x + c)
        std::vector<u32> next(acc.coeff_indices().size() + 1, 0);
        const auto& ac = acc.coeff_indices();
        for (size_t k = 0; k < ac.size(); ++k) {
            next[k + 1] = fld.add_idx(next[k + 1], ac[k]);
            next[k] = fld.add_idx(next[k], fld.mul_idx(ac[k], c.index()));
        }
        next[0] = fld.add_idx(next[0], co[i]);
        acc = Poly(fld, std::move(next));
    }
    return acc;
}

std::pair<Poly, NormalizeTransform> normalize(const Poly& f) {
    const Field& fld = f.field();
    if (f.degree() < 1) fail(Errc::invalid_argument, "normalize requires degree >= 1");
    const u64 m = static_cast<u64>(f.degree());
    FieldElement lc = f.leading_coeff();
    FieldElement b = lc.inverse();
    FieldElement c = fld.zero();
    if (m % fld.p() != 0) {
        // kill the x^{m-1} coefficient: c = -a_{m-1} / (m * a_m)
        FieldElement m_elt = fld.from_int(static_cast<i64>(m % fld.p()));
        c = -(f.coeff(m - 1) / (m_elt * lc));
    }
    Poly shifted = shift_argument(f, c);
    FieldElement d = -(b * evaluate(shifted, fld.zero()));
    Poly g = scale(shifted, b);
    g.add_term(d, 0);
    return {g, NormalizeTransform{b, c, d}};
}

} // namespace ppinv
