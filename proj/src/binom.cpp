#include "ppinv/binom.hpp"

#include <functional>

#include "ppinv/intmath.hpp"

namespace ppinv {

namespace {

u32 binom_digit_mod_p(u64 nd, u64 kd, u32 p) { // nd, kd < p
    if (kd > nd) return 0;
    u64 num = 1, den = 1;
    for (u64 i = 1; i <= kd; ++i) {
        num = num * ((nd - kd + i) % p) % p;
        den = den * (i % p) % p;
    }
    return static_cast<u32>(num * pow_mod_u64(den, p - 2, p) % p);
}

u32 mod5(const Int& v) { return static_cast<u32>(mod_nonneg(v, 5)); }

u64 pow5_u64(u32 e) {
    u64 r = 1;
    while (e--) r *= 5;
    return r;
}

} // namespace

u32 lucas_binom_mod_p(const Int& n, const Int& k, u32 p) {
    if (!is_prime_u64(p)) fail(Errc::not_prime, "Lucas' theorem needs a prime modulus");
    if (n < 0 || k < 0) fail(Errc::invalid_argument, "Lucas arguments must be non-negative");
    Int nn = n, kk = k;
    u64 r = 1;
    while (kk > 0 || nn > 0) {
        u64 nd = static_cast<u64>(nn % p);
        u64 kd = static_cast<u64>(kk % p);
        if (kd > nd) return 0;
        r = r * binom_digit_mod_p(nd, kd, p) % p;
        nn /= p;
        kk /= p;
    }
    return static_cast<u32>(r);
}

bool binom_shift_check(u64 q, const Int& r, u64 k) {
    auto factors = factorize_u64(q);
    if (factors.size() != 1) fail(Errc::invalid_argument, "q must be a prime power");
    u64 p = factors[0].first;
    if (k > q - 1) fail(Errc::out_of_range, "need 0 <= k <= q-1");
    Int lhs = binom_generalized(Int(q) + r, static_cast<i64>(k));
    Int rhs = binom_generalized(r, static_cast<i64>(k));
    return mod_nonneg(lhs - rhs, Int(p)) == 0;
}

QuinticBinomA quintic_binom_A(u64 m, u32 n) {
    if (n < 1 || n > 27) fail(Errc::invalid_argument, "need 1 <= n <= 27");
    u64 q = pow5_u64(n);
    if (m > q - 1) fail(Errc::out_of_range, "need 0 <= m <= 5^n - 1");
    QuinticBinomA out{lucas_binom_mod_p(Int(5) * m + 3, Int(m), 5), std::nullopt};
    if (out.value != 0) {
        // nonzero iff the digits are nonincreasing and <= 3; then
        // k_j = #{i : m_i >= j} recovers m = sum (5^{k_j}-1)/4
        auto digits = base_p_digits(Int(m), 5).digits;
        digits.resize(n, 0);
        std::array<u32, 3> k{};
        for (u32 lvl = 1; lvl <= 3; ++lvl) {
            u32 cnt = 0;
            while (cnt < n && digits[cnt] >= lvl) ++cnt;
            k[3 - lvl] = cnt;
        }
        u64 sum = 0;
        for (u32 j = 0; j < 3; ++j) sum += (pow5_u64(k[j]) - 1) / 4;
        if (sum != m)
            fail(Errc::consistency_failure, "nonzero C(5m+3, m) without a valid decomposition of m");
        out.decomposition = k;
    }
    return out;
}

EmkTable emk_table(const FieldElement& a, u64 m) {
    const Field& f = a.field();
    if (f.p() != 5) fail(Errc::invalid_argument, "e_{mk} lives over characteristic 5");
    if (a.is_zero()) fail(Errc::invalid_argument, "parameter a must be nonzero");
    const u64 q = f.q();
    u64 t1 = (q - 5) / 10;
    u64 t2 = (q / 5 - 1) / 2; // (5^{n-1} - 1)/2
    if (t1 != t2) fail(Errc::consistency_failure, "the two forms of T disagree");
    if (m > (q - 3) / 2) fail(Errc::out_of_range, "need 0 <= m <= (q-3)/2");

    EmkTable out{q, t1, m, {f.zero(), f.zero(), f.zero(), f.zero()}};
    FieldElement apow = a.pow(-(Int(5) * m + 2));
    for (u32 k = 0; k < 4; ++k) {
        u32 binom = lucas_binom_mod_p(Int(2) * q - 4 * m - 4, Int(k) * ((q - 1) / 2) + m, 5);
        FieldElement v = f.from_int(binom) * apow;
        if ((k + m) % 2 != 0) v = -v;
        out.e[k] = v;
    }
    return out;
}

FieldElement quintic_coeff_via_emk(const FieldElement& a, const Int& i) {
    const Field& f = a.field();
    if (f.p() != 5) fail(Errc::invalid_argument, "the quintic family lives over characteristic 5");
    const u64 q = f.q();
    if (a.is_zero() || a.pow(Int((q - 1) / 2)) != f.from_int(-1))
        fail(Errc::not_a_permutation, "parameter a must be a non-square");
    if (i < 1 || i > Int(q) - 2) fail(Errc::out_of_range, "need 1 <= i <= q-2");
    if (i % 2 == 0) return f.zero(); // coefficients of even powers vanish

    u64 m = static_cast<u64>((i - 1) / 2);
    EmkTable t = emk_table(a, m);
    const u64 T = t.T;
    if (m > 4 * T + 1) return f.zero();
    u32 terms = m <= T ? 4 : m <= 2 * T ? 3 : m <= 3 * T ? 2 : 1;
    FieldElement sum = f.zero();
    for (u32 k = 0; k < terms; ++k) sum = sum + t.e[k];
    return sum;
}

// ---- reports ----

bool Report::all_pass() const {
    for (const auto& l : lines)
        if (!l.skipped && l.fail > 0) return false;
    return true;
}

std::string Report::to_text() const {
    std::string out;
    for (const auto& l : lines) {
        out += "THEOREM " + l.id + " n=" + std::to_string(n);
        if (l.skipped) {
            out += " skipped (" + l.note + ")";
        } else {
            out += " range=" + std::to_string(l.lo) + ".." + std::to_string(l.hi);
            out += " pass=" + std::to_string(l.pass) + " fail=" + std::to_string(l.fail);
            if (l.fail > 0 && !l.note.empty()) out += " first-fail=" + l.note;
        }
        out += '\n';
    }
    return out;
}

namespace {

// Exact C(alpha0 + m*dalpha, beta0 + m) walked incrementally over m; each
// advance applies unit binomial transitions (multiply, then exact divide).
class BinomSweep {
public:
    BinomSweep(i64 alpha, i64 dalpha, i64 beta) : alpha_(alpha), dalpha_(dalpha), beta_(beta) { recompute(); }

    const Int& value() const { return v_; }

    void advance() {
        if (beta_ < 0 || alpha_ <= 0 || v_ == 0) {
            alpha_ += dalpha_;
            ++beta_;
            recompute();
            return;
        }
        // C(a, b+1) = C(a, b) (a-b)/(b+1)
        v_ *= alpha_ - beta_;
        v_ /= beta_ + 1;
        ++beta_;
        i64 steps = dalpha_ > 0 ? dalpha_ : -dalpha_;
        for (i64 s = 0; s < steps; ++s) {
            if (v_ == 0) {
                alpha_ += dalpha_ > 0 ? steps - s : s - steps;
                recompute();
                return;
            }
            if (dalpha_ > 0) {
                // C(a+1, b) = C(a, b) (a+1)/(a+1-b)
                v_ *= alpha_ + 1;
                v_ /= alpha_ + 1 - beta_;
                ++alpha_;
            } else {
                // C(a-1, b) = C(a, b) (a-b)/a
                v_ *= alpha_ - beta_;
                v_ /= alpha_;
                --alpha_;
            }
        }
    }

private:
    void recompute() { v_ = beta_ < 0 ? Int(0) : binom_exact(Int(alpha_), Int(beta_)); }

    i64 alpha_, dalpha_, beta_;
    Int v_;
};

// One binomial family C(a0 + 5m, b0 + m) or C(a0 - 4m, b0 + m), evaluated by
// both paths; a path disagreement poisons the whole check.
struct DualBinom {
    BinomSweep sweep;
    i64 a0, da, b0;
    i64 m = 0;

    DualBinom(i64 alpha0, i64 dalpha, i64 beta0) : sweep(alpha0, dalpha, beta0), a0(alpha0), da(dalpha), b0(beta0) {}

    // value mod 5, or no value when the two paths disagree
    std::optional<u32> value_mod5() {
        u32 exact = mod5(sweep.value());
        i64 beta = b0 + m;
        if (beta < 0) return exact == 0 ? std::optional<u32>(0) : std::nullopt;
        u32 lucas = lucas_binom_mod_p(Int(a0 + da * m), Int(beta), 5);
        if (lucas != exact) return std::nullopt;
        return exact;
    }

    void next() {
        sweep.advance();
        ++m;
    }
};

void check_suite_bound(u32 n) {
    if (n < 1 || n > 6) fail(Errc::out_of_range, "congruence machinery supports 1 <= n <= 6");
}

template <typename Fn>
ReportLine run_item(const std::string& id, i64 lo, i64 hi, Fn&& fn) {
    ReportLine line{id, lo, hi, 0, 0, false, {}};
    for (i64 m = lo; m <= hi; ++m) {
        std::string note;
        if (fn(m, note)) {
            ++line.pass;
        } else {
            ++line.fail;
            if (line.note.empty()) line.note = note.empty() ? "m=" + std::to_string(m) : note;
        }
    }
    return line;
}

ReportLine skipped_item(const std::string& id, const std::string& why) {
    ReportLine line{id, 0, 0, 0, 0, true, why};
    return line;
}

} // namespace

Report congruence_suite(u32 n) {
    check_suite_bound(n);
    const i64 q = static_cast<i64>(pow5_u64(n));
    const i64 h = (q - 1) / 2;
    const i64 T = (q - 5) / 10;
    if (T != (q / 5 - 1) / 2) fail(Errc::consistency_failure, "the two forms of T disagree");

    Report rep{n, {}};

    {
        DualBinom lhs(2 * q - 4, -4, 0), rhs(3, 5, 0);
        rep.lines.push_back(run_item("e-m0", 0, 4 * T + 1, [&](i64 m, std::string& note) {
            auto l = lhs.value_mod5();
            auto r = rhs.value_mod5();
            lhs.next();
            rhs.next();
            if (!l || !r) {
                note = "path disagreement at m=" + std::to_string(m);
                return false;
            }
            u32 want = m % 2 == 0 ? *r : (5 - *r) % 5;
            if (*l != want) {
                note = "m=" + std::to_string(m);
                return false;
            }
            return true;
        }));
    }

    {
        DualBinom lhs(2 * q - 4, -4, h), rhs(3 + h, 5, h);
        rep.lines.push_back(run_item("e-m1", 0, 3 * T, [&](i64 m, std::string& note) {
            auto l = lhs.value_mod5();
            auto r = rhs.value_mod5();
            lhs.next();
            rhs.next();
            if (!l || !r) {
                note = "path disagreement at m=" + std::to_string(m);
                return false;
            }
            u32 want = m % 2 == 0 ? *r : (5 - *r) % 5;
            if (*l != want) {
                note = "m=" + std::to_string(m);
                return false;
            }
            return true;
        }));
    }

    {
        DualBinom lhs(2 * q - 4, -4, q - 1), rhs(2, 5, -1);
        rep.lines.push_back(run_item("e-m2", 0, 2 * T, [&](i64 m, std::string& note) {
            auto l = lhs.value_mod5();
            auto r = rhs.value_mod5();
            lhs.next();
            rhs.next();
            if (!l || !r) {
                note = "path disagreement at m=" + std::to_string(m);
                return false;
            }
            u32 want = m % 2 != 0 ? *r : (5 - *r) % 5; // sign (-1)^{m-1}
            if (*l != want) {
                note = "m=" + std::to_string(m);
                return false;
            }
            return true;
        }));
    }

    {
        DualBinom lhs(2 * q - 4, -4, 3 * h), rhs(2 + h, 5, h - 1);
        rep.lines.push_back(run_item("e-m3", 0, T, [&](i64 m, std::string& note) {
            auto l = lhs.value_mod5();
            auto r = rhs.value_mod5();
            lhs.next();
            rhs.next();
            if (!l || !r) {
                note = "path disagreement at m=" + std::to_string(m);
                return false;
            }
            u32 want = m % 2 != 0 ? *r : (5 - *r) % 5;
            if (*l != want) {
                note = "m=" + std::to_string(m);
                return false;
            }
            return true;
        }));
    }

    {
        // values of C(5m+3, m) on 2T < m <= 4T+1: 3^C(k1,k2) at the special m, else 0
        DualBinom a(3 + 5 * (2 * T + 1), 5, 2 * T + 1);
        rep.lines.push_back(run_item("em0=13", 2 * T + 1, 4 * T + 1, [&](i64 m, std::string& note) {
            auto av = a.value_mod5();
            a.next();
            if (!av) {
                note = "path disagreement at m=" + std::to_string(m);
                return false;
            }
            u32 want = 0;
            for (u32 k1 = 0; k1 < n; ++k1) {
                for (u32 k2 = k1; k2 < n; ++k2) {
                    i64 cand = (q + static_cast<i64>(pow5_u64(k1)) + static_cast<i64>(pow5_u64(k2)) - 3) / 4;
                    if (cand == m) want = k1 == k2 ? 3 : 1;
                }
            }
            if (*av != want) {
                note = "m=" + std::to_string(m);
                return false;
            }
            return true;
        }));
    }

    if (n >= 2) {
        DualBinom a(3 + 5 * (T + 1), 5, T + 1), b(2 + 5 * (T + 1), 5, T);
        rep.lines.push_back(run_item("em02=0", T + 1, 2 * T, [&](i64 m, std::string& note) {
            auto av = a.value_mod5();
            auto bv = b.value_mod5();
            a.next();
            b.next();
            if (!av || !bv) {
                note = "path disagreement at m=" + std::to_string(m);
                return false;
            }
            if (*av != *bv) {
                note = "m=" + std::to_string(m);
                return false;
            }
            return true;
        }));
    } else {
        rep.lines.push_back(skipped_item("em02=0", "requires n >= 2"));
    }

    {
        DualBinom a(3 + h, 5, h);
        rep.lines.push_back(run_item("em1=0", 0, h, [&](i64 m, std::string& note) {
            auto av = a.value_mod5();
            a.next();
            if (!av) {
                note = "path disagreement at m=" + std::to_string(m);
                return false;
            }
            if (*av != 0) {
                note = "m=" + std::to_string(m);
                return false;
            }
            return true;
        }));
    }

    if (n >= 2) {
        DualBinom a(3, 5, 0), c(2 + h, 5, h - 1), b(2, 5, -1);
        rep.lines.push_back(run_item("em023=0", 0, T, [&](i64 m, std::string& note) {
            auto av = a.value_mod5();
            auto cv = c.value_mod5();
            auto bv = b.value_mod5();
            a.next();
            c.next();
            b.next();
            if (!av || !cv || !bv) {
                note = "path disagreement at m=" + std::to_string(m);
                return false;
            }
            if ((*av + *cv) % 5 != *bv) {
                note = "m=" + std::to_string(m);
                return false;
            }
            return true;
        }));
    } else {
        rep.lines.push_back(skipped_item("em023=0", "requires n >= 2"));
    }

    {
        DualBinom c(2 + h, 5, h - 1), d(2, 5, 0);
        rep.lines.push_back(run_item("Ceq-D", 0, 2 * T, [&](i64 m, std::string& note) {
            auto cv = c.value_mod5();
            auto dv = d.value_mod5();
            c.next();
            d.next();
            if (!cv || !dv) {
                note = "path disagreement at m=" + std::to_string(m);
                return false;
            }
            if (*cv != (5 - *dv) % 5) {
                note = "m=" + std::to_string(m);
                return false;
            }
            return true;
        }));
    }

    {
        // values 1 / 3 over all decompositions m = sum of three (5^k - 1)/4
        std::vector<std::array<u32, 3>> triples;
        for (u32 k1 = 0; k1 <= n; ++k1)
            for (u32 k2 = k1; k2 <= n; ++k2)
                for (u32 k3 = k2; k3 <= n; ++k3) triples.push_back({k1, k2, k3});
        rep.lines.push_back(
            run_item("Aeq13", 0, static_cast<i64>(triples.size()) - 1, [&](i64 t, std::string& note) {
                auto [k1, k2, k3] = triples[static_cast<size_t>(t)];
                Int m = (Int(pow5_u64(k1)) + pow5_u64(k2) + pow5_u64(k3) - 3) / 4;
                u32 lucas = lucas_binom_mod_p(5 * m + 3, m, 5);
                u32 exact = mod5(binom_exact(5 * m + 3, m));
                u32 want = (k1 == k2 && k2 == k3) || (k1 < k2 && k2 < k3) ? 1 : 3;
                if (lucas != exact || lucas != want) {
                    note = "k=(" + std::to_string(k1) + "," + std::to_string(k2) + "," + std::to_string(k3) + ")";
                    return false;
                }
                return true;
            }));
    }

    return rep;
}

Report theorem_predicate_equivalences(u32 n) {
    check_suite_bound(n);
    const i64 q = static_cast<i64>(pow5_u64(n));
    const i64 h = (q - 1) / 2;
    const i64 T = (q - 5) / 10;

    Report rep{n, {}};

    auto digits_of = [&](i64 m, u32 len) {
        auto d = base_p_digits(Int(m), 5).digits;
        d.resize(len, 0);
        return d;
    };

    {
        DualBinom a(3, 5, 0);
        rep.lines.push_back(run_item("Aneq0", 0, q - 1, [&](i64 m, std::string& note) {
            auto av = a.value_mod5();
            a.next();
            if (!av) {
                note = "path disagreement at m=" + std::to_string(m);
                return false;
            }
            bool i_nonzero = *av != 0;
            auto d = digits_of(m, n);
            bool ii = d[0] <= 3;
            for (u32 k = 0; k + 1 < n && ii; ++k) ii = d[k] >= d[k + 1];
            bool iii = false;
            for (u32 k1 = 0; k1 <= n && !iii; ++k1)
                for (u32 k2 = k1; k2 <= n && !iii; ++k2)
                    for (u32 k3 = k2; k3 <= n; ++k3) {
                        i64 s = static_cast<i64>((pow5_u64(k1) - 1) / 4 + (pow5_u64(k2) - 1) / 4 +
                                                 (pow5_u64(k3) - 1) / 4);
                        if (s == m) {
                            iii = true;
                            break;
                        }
                    }
            if (i_nonzero != ii || ii != iii) {
                note = "m=" + std::to_string(m);
                return false;
            }
            return true;
        }));
    }

    {
        DualBinom a(3 + h, 5, h);
        rep.lines.push_back(run_item("bico-id-1", 0, q - 1, [&](i64 m, std::string& note) {
            auto av = a.value_mod5();
            a.next();
            if (!av) {
                note = "path disagreement at m=" + std::to_string(m);
                return false;
            }
            bool i_nonzero = *av != 0;
            auto d = digits_of(m, n);
            bool ii = d[0] == 3 && d[n - 1] >= 2;
            for (u32 k = 0; k + 1 < n && ii; ++k) ii = d[k] >= d[k + 1];
            bool iii = false;
            for (u32 k = 1; k <= n; ++k) {
                if (m == h + static_cast<i64>((pow5_u64(k) - 1) / 4)) {
                    iii = true;
                    break;
                }
            }
            if (i_nonzero != ii || ii != iii) {
                note = "m=" + std::to_string(m);
                return false;
            }
            return true;
        }));
    }

    {
        DualBinom c(2 + h, 5, h - 1);
        rep.lines.push_back(run_item("Cneq0", 0, 2 * T, [&](i64 m, std::string& note) {
            auto cv = c.value_mod5();
            c.next();
            if (!cv) {
                note = "path disagreement at m=" + std::to_string(m);
                return false;
            }
            bool i_nonzero = *cv != 0;
            bool ii = true;
            if (n >= 2) {
                auto d = digits_of(m, n - 1);
                ii = d[0] <= 2;
                for (u32 k = 0; k + 2 < n && ii; ++k) ii = d[k] >= d[k + 1];
            } else {
                ii = m == 0;
            }
            bool iii = false;
            for (u32 k1 = 0; k1 < n && !iii; ++k1)
                for (u32 k2 = k1; k2 < n; ++k2) {
                    i64 s = static_cast<i64>((pow5_u64(k1) - 1) / 4 + (pow5_u64(k2) - 1) / 4);
                    if (s == m) {
                        iii = true;
                        break;
                    }
                }
            if (i_nonzero != ii || ii != iii) {
                note = "m=" + std::to_string(m);
                return false;
            }
            return true;
        }));
    }

    return rep;
}

} // namespace ppinv
