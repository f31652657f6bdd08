#include "ppinv/closed_forms.hpp"

#include <numeric>

#include "ppinv/intmath.hpp"

namespace ppinv {

using boost::multiprecision::pow;

namespace {

Int pow_int(u64 base, u64 e) {
    Int b = base;
    return pow(b, static_cast<unsigned>(e));
}

FieldElement minus_one(const Field& f) { return f.from_int(-1); }

} // namespace

Poly invert_linear(const FieldElement& a, const FieldElement& b) {
    if (&a.field() != &b.field()) fail(Errc::spec_mismatch, "coefficients from different fields");
    if (a.is_zero()) fail(Errc::zero_leading_coefficient, "ax + b needs a != 0");
    const Field& f = a.field();
    FieldElement ai = a.inverse();
    Poly out(f);
    out.add_term(ai, 1);
    out.add_term(-(ai * b), 0);
    return out;
}

Poly invert_monomial(u64 m, const Field& f) {
    if (m < 1) fail(Errc::invalid_argument, "monomial degree must be >= 1");
    const u64 q = f.q();
    if (std::gcd(m, q - 1) != 1) fail(Errc::not_coprime, "x^m permutes F_q only when gcd(m, q-1) = 1");
    if (m == 1) return Poly::from_ints(f, {0, 1});
    // a = -(q-1)^{phi(m)-1} mod m, inverse exponent (a(q-1)+1)/m
    u64 a = pow_mod_u64((q - 1) % m, euler_phi_u64(m) - 1, m);
    a = (m - a) % m;
    Int e = Int(a) * (q - 1) + 1;
    if (e % m != 0) fail(Errc::consistency_failure, "monomial inverse exponent not integral");
    e /= m;
    if (mod_nonneg(Int(m) * e, Int(q - 1)) != 1 % (q - 1))
        fail(Errc::consistency_failure, "monomial inverse exponent check failed");
    return reduced_monomial(f, f.one(), e);
}

Poly dickson_poly(const DicksonParams& params, const Field& f) {
    if (&params.a.field() != &f) fail(Errc::spec_mismatch, "parameter from a different field");
    const u64 n = params.n;
    if (n < 1) fail(Errc::invalid_argument, "Dickson degree must be >= 1");
    if (n > (u64(1) << 26)) fail(Errc::size_exceeded, "Dickson degree too large for dense expansion");
    Poly out(f);
    FieldElement neg_a_pow = f.one(); // (-a)^i
    Int binom = 1;                    // C(n - i, i), updated incrementally
    for (u64 i = 0; 2 * i <= n; ++i) {
        if (i > 0) {
            // C(n-i, i) = C(n-i+1, i-1) * (n-2i+2)(n-2i+1) / (i (n-i+1))
            binom *= Int(n - 2 * i + 2) * (n - 2 * i + 1);
            Int den = Int(i) * (n - i + 1);
            if (binom % den != 0) fail(Errc::consistency_failure, "Dickson binomial update not integral");
            binom /= den;
            neg_a_pow = neg_a_pow * (-params.a);
        }
        // n/(n-i) * C(n-i, i) is integral
        Int c = Int(n) * binom;
        if (c % Int(n - i) != 0) fail(Errc::consistency_failure, "Dickson coefficient not integral");
        c /= Int(n - i);
        i64 cm = static_cast<i64>(c % f.p());
        out.add_term(f.from_int(cm) * neg_a_pow, n - 2 * i);
    }
    return out;
}

Poly invert_dickson(const DicksonParams& params, const Field& f) {
    if (&params.a.field() != &f) fail(Errc::spec_mismatch, "parameter from a different field");
    Int q2m1 = Int(f.q()) * f.q() - 1;
    Int x, y;
    if (egcd(Int(params.n), q2m1, x, y) != 1)
        fail(Errc::not_coprime, "D_n permutes F_q only when gcd(n, q^2-1) = 1");
    Int m = mod_nonneg(x, q2m1);
    DicksonParams inv{static_cast<u64>(m), params.a.pow(Int(params.n))};
    return reduce_mod_xq_minus_x(dickson_poly(inv, f));
}

Poly invert_linearized_binomial(u64 r, const FieldElement& a, u32 base_exp) {
    const Field& f = a.field();
    if (a.is_zero()) fail(Errc::invalid_argument, "binomial parameter a must be nonzero");
    if (r < 1 || r > 1024) fail(Errc::invalid_argument, "Frobenius power r out of supported range");
    if (base_exp == 0 || f.n() % base_exp != 0)
        fail(Errc::not_a_divisor, "tower base exponent must divide the extension degree");
    const u32 nt = f.n() / base_exp;
    const u64 d = std::gcd<u64>(nt, r);
    FieldElement nrm = f.norm(a, base_exp * static_cast<u32>(d));
    if (nrm == f.one())
        fail(Errc::not_a_permutation, "x^{Q^r} - a x permutes the field only when the norm of a is not 1");
    FieldElement prefactor = nrm / (f.one() - nrm);

    const Int Q = pow_int(f.p(), base_exp);
    const Int Qr = pow(Q, static_cast<unsigned>(r));
    Poly out(f);
    for (u64 i = 0; i < nt / d; ++i) {
        Int top = pow(Q, static_cast<unsigned>((i + 1) * r)) - 1;
        Int ae = top / (Qr - 1); // geometric sum, exact
        FieldElement ci = prefactor * a.pow(-ae);
        Int xe = pow(Q, static_cast<unsigned>(i * r));
        out.add_term(ci, reduce_exponent(xe, f.q()));
    }
    return out;
}

FieldElement SSequence::at(i64 i) const {
    if (i < -1 || i > static_cast<i64>(n)) fail(Errc::out_of_range, "S-sequence index out of range");
    return values[static_cast<size_t>(i + 1)];
}

FieldElement SSequence::z() const { return at(n) + a * at(static_cast<i64>(n) - 2) * at(static_cast<i64>(n) - 2); }

SSequence s_sequence(const FieldElement& a, const FieldElement& b, u32 n) {
    const Field& f = a.field();
    if (&b.field() != &f) fail(Errc::spec_mismatch, "parameters from different fields");
    if (f.p() != 2) fail(Errc::invalid_argument, "S-sequence is defined over characteristic 2");
    if (a.is_zero() || b.is_zero()) fail(Errc::invalid_argument, "S-sequence needs a, b nonzero");
    if (n < 1) fail(Errc::invalid_argument, "S-sequence length must be >= 1");

    SSequence s{a, b, n, {}};
    s.values.reserve(n + 2);
    s.values.push_back(f.zero());
    s.values.push_back(f.one());
    for (u32 i = 1; i <= n; ++i) {
        Int e = Int(1) << (i - 1);
        FieldElement si = b.pow(e) * s.values[i] + a.pow(e) * s.values[i - 1];
        FieldElement alt = b * s.values[i] * s.values[i] +
                           a * a * s.values[i - 1] * s.values[i - 1] * s.values[i - 1] * s.values[i - 1];
        if (si != alt) fail(Errc::consistency_failure, "the two S-sequence recurrences disagree");
        s.values.push_back(si);
    }
    FieldElement zn = s.z();
    if (!zn.is_zero() && zn != f.one()) fail(Errc::consistency_failure, "S_n + a S_{n-2}^2 outside {0, 1}");
    return s;
}

Poly invert_linearized_trinomial(const FieldElement& a, const FieldElement& b) {
    const Field& f = a.field();
    if (&b.field() != &f) fail(Errc::spec_mismatch, "parameters from different fields");
    if (f.p() != 2) fail(Errc::invalid_argument, "x^4 + b x^2 + a x lives over characteristic 2");
    if (a.is_zero() || b.is_zero()) fail(Errc::invalid_argument, "requires ab != 0");
    const u32 n = f.n();
    SSequence s = s_sequence(a, b, n);
    if (s.z() != f.one()) fail(Errc::not_a_permutation, "x^4 + b x^2 + a x does not permute this field");

    Poly out(f);
    for (u32 i = 0; i < n; ++i) {
        Int two_i1 = Int(1) << (i + 1);
        FieldElement ci = s.at(static_cast<i64>(n) - 2 - i).pow(two_i1) + a.pow(Int(1) - two_i1) * s.at(i);
        out.add_term(ci, u64(1) << i);
    }
    return reduce_mod_xq_minus_x(out);
}

TrinomialPpCount count_trinomial_pps(u32 n) {
    if (n < 1 || n > 20) fail(Errc::size_exceeded, "trinomial census supports 1 <= n <= 20");
    FieldPtr fp = Field::make(2, n);
    const Field& f = *fp;
    const u64 q = f.q();

    u64 count = 0;
    for (u64 ai = 1; ai < q; ++ai) {
        const u32 a = static_cast<u32>(ai);
        for (u64 bi = 1; bi < q; ++bi) {
            // S-recurrence on raw indices; b^(2^{i-1}) and a^(2^{i-1}) by squaring
            u32 s_prev = 1, s_prev2 = 0;
            u32 s_n2 = 0; // S_{n-2}
            u32 bp = static_cast<u32>(bi), ap = a;
            for (u32 i = 1; i <= n; ++i) {
                if (i == n) s_n2 = s_prev2;
                u32 s = f.add_idx(f.mul_idx(bp, s_prev), f.mul_idx(ap, s_prev2));
                s_prev2 = s_prev;
                s_prev = s;
                bp = f.mul_idx(bp, bp);
                ap = f.mul_idx(ap, ap);
            }
            u32 z = f.add_idx(s_prev, f.mul_idx(a, f.mul_idx(s_n2, s_n2)));
            if (z == 1) ++count;
        }
    }
    u64 formula = (q - 1) * (n % 2 == 0 ? q - 1 : q + 1) / 3;
    return {count, formula};
}

namespace {

void require_quintic_field(const Field& f) {
    if (f.p() != 5) fail(Errc::invalid_argument, "the quintic family lives over characteristic 5");
}

void require_quintic_pp(const FieldElement& a) {
    const Field& f = a.field();
    require_quintic_field(f);
    if (a.is_zero() || a.pow(Int((f.q() - 1) / 2)) != minus_one(f))
        fail(Errc::not_a_permutation, "x^5 - 2a x^3 + a^2 x permutes F_{5^n} only for non-square a");
}

} // namespace

Poly quintic_pp(const FieldElement& a) {
    const Field& f = a.field();
    require_quintic_field(f);
    Poly out(f);
    out.add_term(f.one(), 5);
    out.add_term(-(a + a), 3);
    out.add_term(a * a, 1);
    return out;
}

Poly invert_quintic_main(const FieldElement& a) {
    require_quintic_pp(a);
    const Field& f = a.field();
    const u32 n = f.n();
    const Int q = f.q();
    Poly out(f);
    for (u32 i = 0; i < n; ++i) {
        for (u32 j = i; j < n; ++j) {
            Int ae = (q + pow_int(5, i + 1) + pow_int(5, j + 1) - 3) / 4;
            Int xe = (q + pow_int(5, i) + pow_int(5, j) - 1) / 2;
            FieldElement coef = f.from_int(i == j ? 3 : 1) * a.pow(-ae);
            out.add_term(coef, static_cast<u64>(xe)); // exponent < q, already reduced
        }
    }
    return reduce_mod_xq_minus_x(out);
}

FieldElement quintic_pointwise(const FieldElement& a, const FieldElement& x) {
    require_quintic_pp(a);
    const Field& f = a.field();
    if (&x.field() != &f) fail(Errc::spec_mismatch, "point from a different field");
    if (x.is_zero()) return f.zero();

    const u64 q = f.q();
    FieldElement w = a / (x * x);
    FieldElement t = w.pow(Int((q - 1) / 4));
    if (t == f.one())
        fail(Errc::denominator_zero,
             "1 - (a/x^2)^{(q-1)/4} vanished under the permutation condition; this should be impossible");
    FieldElement u = (x * x).inverse();
    FieldElement s = f.zero();
    for (u32 i = 0; i < f.n(); ++i) {
        Int we = (pow_int(5, i + 1) - 1) / 4;
        s = s + w.pow(-we) * u.pow(pow_int(5, i));
    }
    FieldElement r = t / (f.one() - t) * s;
    return x * r * r;
}

// ---- cyclotomic mappings ----

void validate_cyclotomic(const CyclotomicSpec& spec) {
    const Field& f = spec.field();
    const u64 q = f.q();
    if (spec.d < 1 || spec.s < 1 || spec.d * spec.s != q - 1)
        fail(Errc::invalid_argument, "need q - 1 = d * s");
    if (spec.d % f.p() == 0) fail(Errc::characteristic_divides_d, "1/d does not exist in the field");
    if (spec.a.size() != spec.d || spec.r.size() != spec.d)
        fail(Errc::invalid_argument, "need exactly d branch coefficients and exponents");
    // omega has order exactly d
    if (spec.omega.is_zero() || spec.omega.pow(Int(spec.d)) != f.one())
        fail(Errc::invalid_argument, "omega is not a d-th root of unity");
    for (auto [ell, mult] : factorize_u64(spec.d)) {
        if (spec.omega.pow(Int(spec.d / ell)) == f.one())
            fail(Errc::invalid_argument, "omega has order smaller than d");
    }
    for (u64 i = 0; i < spec.d; ++i) {
        if (&spec.a[i].field() != &f) fail(Errc::spec_mismatch, "branch coefficient from a different field");
        if (spec.a[i].is_zero()) fail(Errc::invalid_argument, "branch coefficients must be nonzero");
        if (spec.r[i] < 1 || spec.r[i] >= spec.s)
            fail(Errc::invalid_argument, "branch exponents must satisfy 1 <= r_i < s");
    }
}

bool cyclotomic_is_pp(const CyclotomicSpec& spec) {
    const Field& f = spec.field();
    for (u64 i = 0; i < spec.d; ++i)
        if (std::gcd(spec.r[i], spec.s) != 1) return false;
    // {a_i^s w^{i r_i}} must be all of U_d
    std::vector<bool> seen(f.q(), false);
    for (u64 i = 0; i < spec.d; ++i) {
        FieldElement v = spec.a[i].pow(Int(spec.s)) * spec.omega.pow(Int(i) * spec.r[i]);
        if (v.pow(Int(spec.d)) != f.one()) return false; // not in U_d (cannot happen)
        if (seen[v.index()]) return false;
        seen[v.index()] = true;
    }
    return true;
}

Poly cyclotomic_forward(const CyclotomicSpec& spec) {
    validate_cyclotomic(spec);
    const Field& f = spec.field();
    FieldElement dinv = f.from_int(static_cast<i64>(spec.d % f.p())).inverse();
    Poly out(f);
    for (u64 i = 0; i < spec.d; ++i) {
        for (u64 j = 0; j < spec.d; ++j) {
            FieldElement coef = dinv * spec.a[i] * spec.omega.pow(-(Int(i) * j));
            out.add_term(coef, spec.r[i] + j * spec.s);
        }
    }
    return reduce_mod_xq_minus_x(out);
}

Poly invert_cyclotomic(const CyclotomicSpec& spec) {
    validate_cyclotomic(spec);
    if (!cyclotomic_is_pp(spec)) fail(Errc::not_a_permutation, "cyclotomic mapping criterion failed");
    const Field& f = spec.field();
    FieldElement dinv = f.from_int(static_cast<i64>(spec.d % f.p())).inverse();
    Poly out(f);
    for (u64 i = 0; i < spec.d; ++i) {
        Int x, y;
        egcd(Int(spec.r[i]), Int(spec.s), x, y);
        u64 rt = static_cast<u64>(mod_nonneg(x, Int(spec.s))); // r_i^{-1} mod s, in [1, s)
        Int t = (Int(1) - Int(spec.r[i]) * rt) / Int(spec.s);
        for (u64 j = 0; j < spec.d; ++j) {
            Int e = Int(rt) + Int(j) * spec.s;
            FieldElement coef = dinv * spec.omega.pow(Int(i) * (t - Int(j) * spec.r[i])) * spec.a[i].pow(-e);
            out.add_term(coef, static_cast<u64>(e));
        }
    }
    return reduce_mod_xq_minus_x(out);
}

// ---- Dickson matrix criterion ----

Poly linearized_to_poly(std::span<const FieldElement> coeffs, u32 base_exp) {
    if (coeffs.empty()) fail(Errc::invalid_argument, "empty linearized polynomial");
    const Field& f = coeffs[0].field();
    if (base_exp == 0 || f.n() % base_exp != 0 || coeffs.size() != f.n() / base_exp)
        fail(Errc::invalid_argument, "need n/base_exp coefficients");
    Poly out(f);
    u64 e = 1;
    u64 step = 1;
    for (u32 i = 0; i < base_exp; ++i) step *= f.p();
    for (size_t i = 0; i < coeffs.size(); ++i) {
        out.add_term(coeffs[i], e);
        e *= step;
    }
    return out;
}

std::vector<std::vector<FieldElement>> dickson_matrix(std::span<const FieldElement> coeffs, u32 base_exp) {
    if (coeffs.empty()) fail(Errc::invalid_argument, "empty linearized polynomial");
    const Field& f = coeffs[0].field();
    if (base_exp == 0 || f.n() % base_exp != 0 || coeffs.size() != f.n() / base_exp)
        fail(Errc::invalid_argument, "need n/base_exp coefficients");
    const u32 nt = f.n() / base_exp;
    std::vector<std::vector<FieldElement>> m;
    m.reserve(nt);
    for (u32 i = 0; i < nt; ++i) {
        std::vector<FieldElement> row;
        row.reserve(nt);
        for (u32 j = 0; j < nt; ++j) {
            u32 k = (j + nt - i % nt) % nt;
            row.push_back(coeffs[k].frobenius(static_cast<i64>(base_exp) * i));
        }
        m.push_back(std::move(row));
    }
    return m;
}

FieldElement field_matrix_det(std::vector<std::vector<FieldElement>> m) {
    if (m.empty()) fail(Errc::invalid_argument, "empty matrix");
    const Field& f = m[0][0].field();
    const size_t n = m.size();
    FieldElement det = f.one();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return f.zero();
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det = det * m[col][col];
        FieldElement inv = m[col][col].inverse();
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            FieldElement factor = m[row][col] * inv;
            for (size_t j = col; j < n; ++j) m[row][j] = m[row][j] - factor * m[col][j];
        }
    }
    return det;
}

bool linearized_is_permutation(std::span<const FieldElement> coeffs, u32 base_exp) {
    return !field_matrix_det(dickson_matrix(coeffs, base_exp)).is_zero();
}

// ---- Table 1 ----

namespace {

using Params = std::span<const FieldElement>;

bool nonzero_nonsquare(const Field& f, const FieldElement& a) {
    return !a.is_zero() && !f.is_dth_power(a, 2);
}

Poly build_from_pattern(const Field& f, std::initializer_list<std::pair<i64, FieldElement>> terms) {
    Poly out(f);
    for (const auto& [e, c] : terms) out.add_term(c, static_cast<u64>(e));
    return out;
}

std::vector<Table1Row> make_catalog() {
    std::vector<Table1Row> rows;

    auto no_params = [](const Field&, const Poly&) {
        return std::make_optional(std::vector<FieldElement>{});
    };

    // x
    rows.push_back({
        "table1.x", "x", "any q", 1, 0,
        [](const Field&) { return true; },
        [](const Field&, Params) { return true; },
        [](const Field& f, Params) { return Poly::from_ints(f, {0, 1}); },
        [](const Field& f, Params) { return Poly::from_ints(f, {0, 1}); },
        no_params,
    });

    // x^2, q = 2^n
    rows.push_back({
        "table1.x2", "x^2", "q = 2^n", 2, 0,
        [](const Field& f) { return f.p() == 2; },
        [](const Field&, Params) { return true; },
        [](const Field& f, Params) { return Poly::from_ints(f, {0, 0, 1}); },
        [](const Field& f, Params) { return invert_monomial(2, f); },
        no_params,
    });

    // x^3, q != 1 mod 3
    rows.push_back({
        "table1.x3", "x^3", "q not 1 mod 3", 3, 0,
        [](const Field& f) { return f.q() % 3 != 1; },
        [](const Field&, Params) { return true; },
        [](const Field& f, Params) { return Poly::from_ints(f, {0, 0, 0, 1}); },
        [](const Field& f, Params) { return invert_monomial(3, f); },
        no_params,
    });

    // x^3 - a x, a not a square, q = 3^n
    rows.push_back({
        "table1.x3-ax", "x^3 - a x", "a not a square, q = 3^n", 3, 1,
        [](const Field& f) { return f.p() == 3; },
        [](const Field& f, Params p) { return nonzero_nonsquare(f, p[0]); },
        [](const Field& f, Params p) {
            return build_from_pattern(f, {{3, f.one()}, {1, -p[0]}});
        },
        [](const Field&, Params p) { return invert_linearized_binomial(1, p[0], 1); },
        [](const Field&, const Poly& g) {
            return std::make_optional(std::vector<FieldElement>{-g.coeff(1)});
        },
    });

    // x^4, q = 2^n
    rows.push_back({
        "table1.x4", "x^4", "q = 2^n", 4, 0,
        [](const Field& f) { return f.p() == 2; },
        [](const Field&, Params) { return true; },
        [](const Field& f, Params) { return Poly::from_ints(f, {0, 0, 0, 0, 1}); },
        [](const Field& f, Params) { return invert_monomial(4, f); },
        no_params,
    });

    // x^4 +- 3x, q = 7
    rows.push_back({
        "table1.x4+3x", "x^4 + 3x", "q = 7", 4, 0,
        [](const Field& f) { return f.q() == 7; },
        [](const Field&, Params) { return true; },
        [](const Field& f, Params) { return Poly::from_ints(f, {0, 3, 0, 0, 1}); },
        [](const Field& f, Params) { return Poly::from_ints(f, {0, 3, 0, 0, -1}); },
        no_params,
    });
    rows.push_back({
        "table1.x4-3x", "x^4 - 3x", "q = 7", 4, 0,
        [](const Field& f) { return f.q() == 7; },
        [](const Field&, Params) { return true; },
        [](const Field& f, Params) { return Poly::from_ints(f, {0, -3, 0, 0, 1}); },
        [](const Field& f, Params) { return Poly::from_ints(f, {0, -3, 0, 0, 1}); },
        no_params,
    });

    // x^4 + a x, a not a cube, q = 4^n
    rows.push_back({
        "table1.x4+ax", "x^4 + a x", "a not a cube, q = 2^(2n)", 4, 1,
        [](const Field& f) { return f.p() == 2 && f.n() % 2 == 0; },
        [](const Field& f, Params p) { return !p[0].is_zero() && !f.is_dth_power(p[0], 3); },
        [](const Field& f, Params p) {
            return build_from_pattern(f, {{4, f.one()}, {1, p[0]}});
        },
        [](const Field&, Params p) { return invert_linearized_binomial(1, p[0], 2); },
        [](const Field&, const Poly& g) {
            return std::make_optional(std::vector<FieldElement>{g.coeff(1)});
        },
    });

    // x^4 + b x^2 + a x, ab != 0, S_n + a S_{n-2}^2 = 1, q = 2^n
    rows.push_back({
        "table1.x4+bx2+ax", "x^4 + b x^2 + a x", "ab != 0 and S_n + a S_{n-2}^2 = 1, q = 2^n", 4, 2,
        [](const Field& f) { return f.p() == 2; },
        [](const Field& f, Params p) {
            if (p[0].is_zero() || p[1].is_zero()) return false;
            return s_sequence(p[0], p[1], f.n()).z() == f.one();
        },
        [](const Field& f, Params p) {
            return build_from_pattern(f, {{4, f.one()}, {2, p[1]}, {1, p[0]}});
        },
        [](const Field&, Params p) { return invert_linearized_trinomial(p[0], p[1]); },
        [](const Field&, const Poly& g) {
            return std::make_optional(std::vector<FieldElement>{g.coeff(1), g.coeff(2)});
        },
    });

    // x^5, q != 1 mod 5
    rows.push_back({
        "table1.x5", "x^5", "q not 1 mod 5", 5, 0,
        [](const Field& f) { return f.q() % 5 != 1; },
        [](const Field&, Params) { return true; },
        [](const Field& f, Params) { return Poly::from_ints(f, {0, 0, 0, 0, 0, 1}); },
        [](const Field& f, Params) { return invert_monomial(5, f); },
        no_params,
    });

    // x^5 + a x, a^2 = 2, q = 9 (an involution)
    rows.push_back({
        "table1.x5+ax", "x^5 + a x", "a^2 = 2, q = 9", 5, 1,
        [](const Field& f) { return f.q() == 9; },
        [](const Field& f, Params p) { return p[0] * p[0] == f.from_int(2); },
        [](const Field& f, Params p) {
            return build_from_pattern(f, {{5, f.one()}, {1, p[0]}});
        },
        [](const Field& f, Params p) {
            return build_from_pattern(f, {{5, f.one()}, {1, p[0]}});
        },
        [](const Field&, const Poly& g) {
            return std::make_optional(std::vector<FieldElement>{g.coeff(1)});
        },
    });

    // x^5 - a x, a not a fourth power, q = 5^n
    rows.push_back({
        "table1.x5-ax", "x^5 - a x", "a not a fourth power, q = 5^n", 5, 1,
        [](const Field& f) { return f.p() == 5; },
        [](const Field& f, Params p) { return !p[0].is_zero() && !f.is_dth_power(p[0], 4); },
        [](const Field& f, Params p) {
            return build_from_pattern(f, {{5, f.one()}, {1, -p[0]}});
        },
        [](const Field&, Params p) { return invert_linearized_binomial(1, p[0], 1); },
        [](const Field&, const Poly& g) {
            return std::make_optional(std::vector<FieldElement>{-g.coeff(1)});
        },
    });

    // x^5 +- 2x^2, q = 7
    rows.push_back({
        "table1.x5+2x2", "x^5 + 2x^2", "q = 7", 5, 0,
        [](const Field& f) { return f.q() == 7; },
        [](const Field&, Params) { return true; },
        [](const Field& f, Params) { return Poly::from_ints(f, {0, 0, 2, 0, 0, 1}); },
        [](const Field& f, Params) { return Poly::from_ints(f, {0, 0, -2, 0, 0, 1}); },
        no_params,
    });
    rows.push_back({
        "table1.x5-2x2", "x^5 - 2x^2", "q = 7", 5, 0,
        [](const Field& f) { return f.q() == 7; },
        [](const Field&, Params) { return true; },
        [](const Field& f, Params) { return Poly::from_ints(f, {0, 0, -2, 0, 0, 1}); },
        [](const Field& f, Params) { return Poly::from_ints(f, {0, 0, 2, 0, 0, 1}); },
        no_params,
    });

    // x^5 + a x^3 + 3a^2 x, a not a square, q = 13
    rows.push_back({
        "table1.x5+ax3+3a2x", "x^5 + a x^3 + 3a^2 x", "a not a square, q = 13", 5, 1,
        [](const Field& f) { return f.q() == 13; },
        [](const Field& f, Params p) { return nonzero_nonsquare(f, p[0]); },
        [](const Field& f, Params p) {
            FieldElement a = p[0];
            return build_from_pattern(f, {{5, f.one()}, {3, a}, {1, f.from_int(3) * a * a}});
        },
        [](const Field& f, Params p) {
            // -a^2 x^9 - a x^7 + 4 x^5 + 4a^5 x^3 - 5a^4 x
            FieldElement a = p[0];
            FieldElement a2 = a * a;
            FieldElement a4 = a2 * a2;
            return build_from_pattern(f, {{9, -a2},
                                          {7, -a},
                                          {5, f.from_int(4)},
                                          {3, f.from_int(4) * a4 * a},
                                          {1, f.from_int(-5) * a4}});
        },
        [](const Field&, const Poly& g) {
            return std::make_optional(std::vector<FieldElement>{g.coeff(3)});
        },
    });

    // x^5 + a x^3 + 5^{-1} a^2 x, a != 0, q = +-2 mod 5: the Dickson quintic
    rows.push_back({
        "table1.x5+ax3+5inva2x", "x^5 + a x^3 + 5^(-1) a^2 x", "a != 0, q = +-2 mod 5", 5, 1,
        [](const Field& f) { return f.q() % 5 == 2 || f.q() % 5 == 3; },
        [](const Field&, Params p) { return !p[0].is_zero(); },
        [](const Field& f, Params p) {
            FieldElement a = p[0];
            FieldElement inv5 = f.from_int(5).inverse();
            return build_from_pattern(f, {{5, f.one()}, {3, a}, {1, inv5 * a * a}});
        },
        [](const Field& f, Params p) {
            // D_5(x, -5^{-1} a); Lemma inverse is D_m(x, (-5^{-1} a)^5), m = (3q^2-2)/5
            FieldElement ad = -(f.from_int(5).inverse() * p[0]);
            return invert_dickson({5, ad}, f);
        },
        [](const Field&, const Poly& g) {
            return std::make_optional(std::vector<FieldElement>{g.coeff(3)});
        },
    });

    // x^5 - 2a x^3 + a^2 x, a not a square, q = 5^n: the main quintic family
    rows.push_back({
        "table1.x5-2ax3-a2x", "x^5 - 2a x^3 + a^2 x", "a not a square, q = 5^n", 5, 1,
        [](const Field& f) { return f.p() == 5; },
        [](const Field& f, Params p) { return nonzero_nonsquare(f, p[0]); },
        [](const Field&, Params p) { return quintic_pp(p[0]); },
        [](const Field&, Params p) { return invert_quintic_main(p[0]); },
        [](const Field& f, const Poly& g) {
            // coefficient of x^3 is -2a
            FieldElement a = -(g.coeff(3) * f.from_int(2).inverse());
            return std::make_optional(std::vector<FieldElement>{a});
        },
    });

    // x^5 + a x^3 +- x^2 + 3a^2 x, a not a square, q = 7
    rows.push_back({
        "table1.x5+ax3+x2+3a2x", "x^5 + a x^3 + x^2 + 3a^2 x", "a not a square, q = 7", 5, 1,
        [](const Field& f) { return f.q() == 7; },
        [](const Field& f, Params p) { return nonzero_nonsquare(f, p[0]); },
        [](const Field& f, Params p) {
            FieldElement a = p[0];
            return build_from_pattern(f, {{5, f.one()}, {3, a}, {2, f.one()}, {1, f.from_int(3) * a * a}});
        },
        [](const Field& f, Params p) {
            // x^5 + (2a x^4 - 2x^2) + a^2 x^3 + a x
            FieldElement a = p[0];
            return build_from_pattern(
                f, {{5, f.one()}, {4, f.from_int(2) * a}, {3, a * a}, {2, f.from_int(-2)}, {1, a}});
        },
        [](const Field&, const Poly& g) {
            return std::make_optional(std::vector<FieldElement>{g.coeff(3)});
        },
    });
    rows.push_back({
        "table1.x5+ax3-x2+3a2x", "x^5 + a x^3 - x^2 + 3a^2 x", "a not a square, q = 7", 5, 1,
        [](const Field& f) { return f.q() == 7; },
        [](const Field& f, Params p) { return nonzero_nonsquare(f, p[0]); },
        [](const Field& f, Params p) {
            FieldElement a = p[0];
            return build_from_pattern(f,
                                      {{5, f.one()}, {3, a}, {2, minus_one(f)}, {1, f.from_int(3) * a * a}});
        },
        [](const Field& f, Params p) {
            // x^5 - (2a x^4 - 2x^2) + a^2 x^3 + a x
            FieldElement a = p[0];
            return build_from_pattern(
                f, {{5, f.one()}, {4, f.from_int(-2) * a}, {3, a * a}, {2, f.from_int(2)}, {1, a}});
        },
        [](const Field&, const Poly& g) {
            return std::make_optional(std::vector<FieldElement>{g.coeff(3)});
        },
    });

    return rows;
}

} // namespace

const std::vector<Table1Row>& table1_catalog() {
    static const std::vector<Table1Row> catalog = make_catalog();
    return catalog;
}

const Table1Row* table1_find(std::string_view id) {
    for (const auto& row : table1_catalog())
        if (row.id == id) return &row;
    return nullptr;
}

std::vector<std::vector<FieldElement>> table1_admissible_params(const Table1Row& row, const Field& f) {
    std::vector<std::vector<FieldElement>> out;
    if (!row.field_admissible(f)) return out;
    if (row.num_params == 0) {
        out.push_back({});
        return out;
    }
    if (row.num_params == 1) {
        for (u64 i = 0; i < f.q(); ++i) {
            std::vector<FieldElement> p{f.element(i)};
            if (row.params_admissible(f, p)) out.push_back(std::move(p));
        }
        return out;
    }
    for (u64 i = 0; i < f.q(); ++i) {
        for (u64 j = 0; j < f.q(); ++j) {
            std::vector<FieldElement> p{f.element(i), f.element(j)};
            if (row.params_admissible(f, p)) out.push_back(std::move(p));
        }
    }
    return out;
}

std::optional<std::vector<FieldElement>> table1_match(const Table1Row& row, const Poly& normalized) {
    const Field& f = normalized.field();
    if (!row.field_admissible(f)) return std::nullopt;
    if (normalized.degree() != static_cast<i64>(row.degree)) return std::nullopt;
    auto params = row.extract_params(f, normalized);
    if (!params) return std::nullopt;
    if (!row.params_admissible(f, *params)) return std::nullopt;
    if (row.build_pp(f, *params) != normalized) return std::nullopt;
    return params;
}

InverseResult invert_auto(const Poly& f) {
    const Field& fld = f.field();
    if (!is_permutation(f)) fail(Errc::not_a_permutation, "polynomial does not permute the field");
    if (f.degree() >= 1) {
        auto [g, tr] = normalize(f);
        for (const auto& row : table1_catalog()) {
            auto params = table1_match(row, g);
            if (!params) continue;
            Poly ginv = row.build_inverse(fld, *params);
            // g = b f(x + c) + d, so f^{-1}(y) = g^{-1}(b y + d) + c
            Poly lin(fld);
            lin.add_term(tr.b, 1);
            lin.add_term(tr.d, 0);
            Poly inv = compose_mod(ginv, lin);
            inv.add_term(tr.c, 0);
            inv = reduce_mod_xq_minus_x(inv);
            bool ok = verify_inverse(f, inv);
            return {inv, InverseMethod::closed_form, row.id, ok};
        }
    }
    if (fld.q() == 2) return invert_lagrange(f);
    return invert_coeff_formula_shifted(f);
}

InverseResult invert_closed_form(const Poly& f, std::string_view row_id) {
    const Field& fld = f.field();
    const Table1Row* row = table1_find(row_id);
    if (!row) fail(Errc::invalid_argument, "unknown catalog row '" + std::string(row_id) + "'");
    if (!is_permutation(f)) fail(Errc::not_a_permutation, "polynomial does not permute the field");
    if (f.degree() < 1) fail(Errc::invalid_argument, "constant polynomial cannot match a catalog row");
    auto [g, tr] = normalize(f);
    auto params = table1_match(*row, g);
    if (!params)
        fail(Errc::invalid_argument,
             "polynomial does not match catalog row '" + std::string(row_id) + "' over this field");
    Poly ginv = row->build_inverse(fld, *params);
    Poly lin(fld);
    lin.add_term(tr.b, 1);
    lin.add_term(tr.d, 0);
    Poly inv = compose_mod(ginv, lin);
    inv.add_term(tr.c, 0);
    inv = reduce_mod_xq_minus_x(inv);
    bool ok = verify_inverse(f, inv);
    return {inv, InverseMethod::closed_form, row->id, ok};
}

} // namespace ppinv
