#include "ppinv/perm.hpp"

#include "ppinv/intmath.hpp"

namespace ppinv {

std::string InverseResult::method_string() const {
    switch (method) {
    case InverseMethod::lagrange: return "lagrange";
    case InverseMethod::coeff_formula: return "coeff-formula";
    case InverseMethod::closed_form: return "closed-form:" + closed_form_name;
    }
    return "?";
}

bool is_permutation(const Poly& f) {
    const Field& fld = f.field();
    const u64 q = fld.q();
    std::vector<bool> seen(q, false);
    for (u64 c = 0; c < q; ++c) {
        u32 y = evaluate(f, fld.element(c)).index();
        if (seen[y]) return false;
        seen[y] = true;
    }
    return true;
}

bool verify_inverse(const Poly& f, const Poly& g) {
    if (&f.field() != &g.field()) fail(Errc::spec_mismatch, "polynomials over different fields");
    const Field& fld = f.field();
    for (u64 c = 0; c < fld.q(); ++c) {
        FieldElement x = fld.element(c);
        if (evaluate(g, evaluate(f, x)) != x) return false;
    }
    return true;
}

InverseResult invert_lagrange(const Poly& f) {
    const Field& fld = f.field();
    if (!is_permutation(f)) fail(Errc::not_a_permutation, "invert_lagrange requires a permutation polynomial");
    std::vector<std::pair<FieldElement, FieldElement>> pairs;
    pairs.reserve(fld.q());
    for (u64 c = 0; c < fld.q(); ++c) {
        FieldElement x = fld.element(c);
        pairs.emplace_back(evaluate(f, x), x);
    }
    Poly inv = reduce_mod_xq_minus_x(lagrange_interpolate(fld, pairs));
    bool ok = verify_inverse(f, inv);
    return {inv, InverseMethod::lagrange, {}, ok};
}

InverseResult invert_coeff_formula(const Poly& f) {
    const Field& fld = f.field();
    const u64 q = fld.q();
    if (q < 3) fail(Errc::field_too_small, "coefficient formula requires q >= 3");
    if (!evaluate(f, fld.zero()).is_zero())
        fail(Errc::nonzero_constant_term, "coefficient formula requires f(0) = 0");
    if (!is_permutation(f)) fail(Errc::not_a_permutation, "invert_coeff_formula requires a permutation polynomial");

    // b[i] = coefficient of x^{q-2} in f^{q-1-i}; walk e = q-1-i upward so
    // each power costs one multiplication.
    Poly fe = reduce_mod_xq_minus_x(f);
    Poly power = fe;
    std::vector<u32> b(q - 1, 0); // b[i] for i = 1..q-2
    for (u64 e = 1; e <= q - 2; ++e) {
        if (e > 1) power = reduce_mod_xq_minus_x(power * fe);
        b[q - 1 - e] = power.coeff(q - 2).index();
    }
    std::vector<u32> coeffs(q - 1, 0);
    for (u64 i = 1; i <= q - 2; ++i) coeffs[i] = b[i];
    Poly inv(fld, std::move(coeffs));
    bool ok = verify_inverse(f, inv);
    return {inv, InverseMethod::coeff_formula, {}, ok};
}

InverseResult invert_coeff_formula_shifted(const Poly& f) {
    const Field& fld = f.field();
    FieldElement f0 = evaluate(f, fld.zero());
    if (f0.is_zero()) return invert_coeff_formula(f);
    Poly g = f;
    g.add_term(-f0, 0); // g = f - f(0), g(0) = 0
    InverseResult r = invert_coeff_formula(g);
    // f = g + f0, so f^{-1}(x) = g^{-1}(x - f0)
    Poly translated = Poly::from_ints(fld, {0, 1});
    translated.add_term(-f0, 0);
    Poly inv = compose_mod(r.inverse, translated);
    bool ok = verify_inverse(f, inv);
    return {inv, InverseMethod::coeff_formula, {}, ok};
}

std::vector<Poly> classify_normalized_pps(const Field& f, u32 max_degree, u64 candidate_cap) {
    if (max_degree < 1 || max_degree > 7)
        fail(Errc::invalid_argument, "classification supports degrees 1..7");
    const u64 q = f.q();

    u64 total = 0;
    for (u32 m = 1; m <= max_degree; ++m) {
        u32 free_coeffs = m >= 1 ? m - 1 : 0;
        if (m % f.p() != 0 && m >= 2) --free_coeffs; // x^{m-1} coefficient pinned to 0
        u64 cnt = 1;
        for (u32 i = 0; i < free_coeffs; ++i) {
            if (cnt > candidate_cap / q) {
                cnt = candidate_cap + 1;
                break;
            }
            cnt *= q;
        }
        total += cnt;
        if (total > candidate_cap) fail(Errc::size_exceeded, "classification candidate count exceeds cap");
    }

    std::vector<Poly> out;
    for (u32 m = 1; m <= max_degree; ++m) {
        // monic x^m + sum c_i x^i with c_0 = 0, and c_{m-1} = 0 when p does
        // not divide m; free positions iterate in lexicographic order (c_1
        // slot most significant), each coefficient in canonical element order.
        std::vector<u32> free_pos;
        for (u32 i = 1; i < m; ++i) {
            if (i == m - 1 && m % f.p() != 0) continue;
            free_pos.push_back(i);
        }
        std::vector<u64> rank(free_pos.size(), 0);
        for (;;) {
            std::vector<u32> coeffs(m + 1, 0);
            coeffs[m] = 1;
            for (size_t k = 0; k < free_pos.size(); ++k) coeffs[free_pos[k]] = f.idx_at_rank(rank[k]);
            Poly cand(f, std::move(coeffs));
            if (is_permutation(cand)) out.push_back(cand);
            // odometer: last position varies fastest
            size_t k = free_pos.size();
            while (k > 0) {
                if (++rank[k - 1] < q) break;
                rank[k - 1] = 0;
                --k;
            }
            if (k == 0) break;
        }
    }
    return out;
}

} // namespace ppinv
