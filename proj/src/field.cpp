#include "ppinv/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "ppinv/intmath.hpp"

namespace ppinv {

namespace {

// F_p[x] helpers on raw digit vectors (low-to-high, trimmed), used only
// during field construction.

void trim(std::vector<u32>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a by monic divisor b
std::vector<u32> poly_rem(std::vector<u32> a, const std::vector<u32>& b, u64 p) {
    const size_t db = b.size() - 1;
    trim(a);
    while (a.size() > db) {
        u64 lead = a.back();
        if (lead != 0) {
            size_t shift = a.size() - 1 - db;
            for (size_t i = 0; i <= db; ++i) {
                u64 sub = b[i] * lead % p;
                a[shift + i] = static_cast<u32>((a[shift + i] + p - sub) % p);
            }
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

bool divides(const std::vector<u32>& d, const std::vector<u32>& a, u64 p) {
    return poly_rem(a, d, p).empty();
}

} // namespace

FieldPtr Field::make(u64 p, u32 n, u64 max_q) {
    struct Key {
        u64 p;
        u32 n;
        bool operator<(const Key& o) const { return p < o.p || (p == o.p && n < o.n); }
    };
    static std::map<Key, std::weak_ptr<const Field>> cache;
    static std::mutex mtx;

    if (!is_prime_u64(p)) fail(Errc::not_prime, std::to_string(p) + " is not prime");
    if (n < 1) fail(Errc::invalid_argument, "extension degree must be >= 1");
    u64 bound = std::min(max_q, kHardMaxQ);
    u64 q = 1;
    for (u32 i = 0; i < n; ++i) {
        if (q > bound / p) fail(Errc::size_exceeded, "p^n exceeds field size bound");
        q *= p;
    }

    std::lock_guard<std::mutex> lock(mtx);
    Key key{p, n};
    if (auto it = cache.find(key); it != cache.end()) {
        if (auto sp = it->second.lock()) return sp;
    }
    FieldPtr f(new Field(p, n, bound));
    cache[key] = f;
    return f;
}

Field::Field(u64 p, u32 n, u64 /*max_q*/) : p_(p), n_(n) {
    q_ = 1;
    stride_.resize(n_ + 1);
    for (u32 i = 0; i < n_; ++i) {
        stride_[i] = q_;
        q_ *= p_;
    }
    stride_[n_] = q_;
    find_canonical_modulus();
    find_generator_and_tables();
}

void Field::find_canonical_modulus() {
    if (n_ == 1) {
        modulus_ = {0, 1}; // prime field sentinel: modulus x
        return;
    }
    // lexicographic on (c_0,...,c_{d-1}): c_0 is the most significant digit
    auto candidate_at = [&](u32 d, u64 rank) {
        std::vector<u32> cand(d + 1);
        cand[d] = 1;
        for (u32 i = 0; i < d; ++i) {
            u64 s = 1;
            for (u32 j = 0; j < d - 1 - i; ++j) s *= p_;
            cand[i] = static_cast<u32>(rank / s);
            rank %= s;
        }
        return cand;
    };

    // Monic irreducibles of degree <= n/2, in canonical order; a candidate is
    // irreducible iff none of them divides it.
    std::vector<std::vector<std::vector<u32>>> irr(n_ / 2 + 1);
    auto is_irreducible = [&](const std::vector<u32>& cand, u32 d) {
        for (u32 e = 1; 2 * e <= d; ++e)
            for (const auto& f : irr[e])
                if (divides(f, cand, p_)) return false;
        return true;
    };
    for (u32 d = 1; 2 * d <= n_; ++d) {
        u64 count = 1;
        for (u32 i = 0; i < d; ++i) count *= p_;
        for (u64 rank = 0; rank < count; ++rank) {
            auto cand = candidate_at(d, rank);
            if (is_irreducible(cand, d)) irr[d].push_back(std::move(cand));
        }
    }
    u64 count = 1;
    for (u32 i = 0; i < n_; ++i) count *= p_;
    for (u64 rank = 0; rank < count; ++rank) {
        auto cand = candidate_at(n_, rank);
        if (is_irreducible(cand, n_)) {
            modulus_ = std::move(cand);
            return;
        }
    }
    fail(Errc::consistency_failure, "no irreducible polynomial found"); // unreachable
}

std::vector<u32> Field::coeffs_of(u32 idx) const {
    std::vector<u32> d(n_);
    u64 v = idx;
    for (u32 i = 0; i < n_; ++i) {
        d[i] = static_cast<u32>(v % p_);
        v /= p_;
    }
    return d;
}

u32 Field::idx_of_coeffs(std::span<const u32> digits) const {
    u64 idx = 0;
    for (u32 i = 0; i < n_ && i < digits.size(); ++i) idx += static_cast<u64>(digits[i] % p_) * stride_[i];
    return static_cast<u32>(idx);
}

u64 Field::canonical_rank(u32 idx) const {
    auto d = coeffs_of(idx);
    u64 rank = 0;
    for (u32 i = 0; i < n_; ++i) rank = rank * p_ + d[i];
    return rank;
}

u32 Field::idx_at_rank(u64 rank) const {
    std::vector<u32> d(n_);
    for (u32 i = 0; i < n_; ++i) {
        d[n_ - 1 - i] = static_cast<u32>(rank % p_);
        rank /= p_;
    }
    return idx_of_coeffs(d);
}

u32 Field::add_idx_slow(u32 a, u32 b) const {
    u64 idx = 0;
    u64 va = a, vb = b;
    for (u32 i = 0; i < n_; ++i) {
        u64 s = (va % p_ + vb % p_) % p_;
        idx += s * stride_[i];
        va /= p_;
        vb /= p_;
    }
    return static_cast<u32>(idx);
}

u32 Field::mul_idx_schoolbook(u32 a, u32 b) const {
    if (a == 0 || b == 0) return 0;
    auto da = coeffs_of(a);
    auto db = coeffs_of(b);
    std::vector<u64> prod(2 * n_ - 1, 0);
    for (u32 i = 0; i < n_; ++i) {
        if (!da[i]) continue;
        for (u32 j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + static_cast<u64>(da[i]) * db[j]) % p_;
    }
    // reduce by the monic modulus
    for (u32 k = 2 * n_ - 2; k >= n_; --k) {
        u64 lead = prod[k];
        if (lead) {
            prod[k] = 0;
            for (u32 i = 0; i < n_; ++i) {
                u64 sub = lead * modulus_[i] % p_;
                prod[k - n_ + i] = (prod[k - n_ + i] + p_ - sub) % p_;
            }
        }
        if (k == n_) break;
    }
    u64 idx = 0;
    for (u32 i = 0; i < n_; ++i) idx += prod[i] * stride_[i];
    return static_cast<u32>(idx);
}

void Field::find_generator_and_tables() {
    neg_table_.resize(q_);
    for (u64 a = 0; a < q_; ++a) {
        u64 idx = 0, v = a;
        for (u32 i = 0; i < n_; ++i) {
            idx += ((p_ - v % p_) % p_) * stride_[i];
            v /= p_;
        }
        neg_table_[a] = static_cast<u32>(idx);
    }

    auto factors = factorize_u64(q_ - 1);
    auto pow_boot = [&](u32 base, u64 e) {
        u32 r = 1, x = base;
        while (e) {
            if (e & 1) r = mul_idx_schoolbook(r, x);
            x = mul_idx_schoolbook(x, x);
            e >>= 1;
        }
        return r;
    };
    gen_idx_ = 1;
    for (u64 rank = 1; rank < q_; ++rank) {
        u32 cand = idx_at_rank(rank);
        if (cand == 0) continue;
        bool primitive = true;
        for (auto [ell, mult] : factors) {
            if (pow_boot(cand, (q_ - 1) / ell) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen_idx_ = cand;
            break;
        }
    }

    exp_table_.resize(2 * (q_ - 1));
    log_table_.assign(q_, 0);
    u32 cur = 1;
    for (u64 k = 0; k < q_ - 1; ++k) {
        exp_table_[k] = cur;
        exp_table_[k + (q_ - 1)] = cur;
        log_table_[cur] = static_cast<u32>(k);
        cur = mul_idx_schoolbook(cur, gen_idx_);
    }
    if (cur != 1) fail(Errc::consistency_failure, "generator order mismatch");

    constexpr u64 kAddTableMaxQ = 2048;
    if (p_ != 2 && q_ <= kAddTableMaxQ) {
        add_table_.resize(q_ * q_);
        for (u64 a = 0; a < q_; ++a)
            for (u64 b = a; b < q_; ++b) {
                u32 s = add_idx_slow(static_cast<u32>(a), static_cast<u32>(b));
                add_table_[a * q_ + b] = s;
                add_table_[b * q_ + a] = s;
            }
    }
}

FieldElement Field::element(u64 idx) const {
    if (idx >= q_) fail(Errc::out_of_range, "element index out of range");
    return {*this, static_cast<u32>(idx)};
}

FieldElement Field::from_int(i64 v) const {
    i64 r = v % static_cast<i64>(p_);
    if (r < 0) r += static_cast<i64>(p_);
    return {*this, static_cast<u32>(r)};
}

FieldElement Field::from_coeffs(std::span<const i64> digits) const {
    if (digits.size() > n_) {
        for (size_t i = n_; i < digits.size(); ++i)
            if (digits[i] % static_cast<i64>(p_) != 0)
                fail(Errc::out_of_range, "coefficient vector longer than extension degree");
    }
    u64 idx = 0;
    for (u32 i = 0; i < n_ && i < digits.size(); ++i) {
        i64 r = digits[i] % static_cast<i64>(p_);
        if (r < 0) r += static_cast<i64>(p_);
        idx += static_cast<u64>(r) * stride_[i];
    }
    return {*this, static_cast<u32>(idx)};
}

FieldElement Field::x() const {
    if (n_ == 1) fail(Errc::invalid_argument, "prime field has no extension generator x");
    return {*this, static_cast<u32>(p_)};
}

u32 Field::inv_idx(u32 a) const {
    if (a == 0) fail(Errc::division_by_zero, "inverse of zero");
    return exp_table_[(q_ - 1) - log_table_[a]];
}

u32 Field::pow_idx(u32 a, const Int& e) const {
    if (a == 0) {
        if (e < 0) fail(Errc::division_by_zero, "0 raised to a negative power");
        return e == 0 ? 1u : 0u;
    }
    u64 r = static_cast<u64>(mod_nonneg(e, Int(q_ - 1)));
    u64 k = log_table_[a] * r % (q_ - 1);
    return exp_table_[k];
}

u32 Field::frobenius_idx(u32 a, i64 i) const {
    i64 m = i % static_cast<i64>(n_);
    if (m < 0) m += n_;
    u64 e = 1;
    for (i64 k = 0; k < m; ++k) e *= p_;
    return pow_idx(a, Int(e));
}

FieldElement Field::primitive_root_of_unity(u64 d) const {
    if (d == 0 || (q_ - 1) % d != 0) fail(Errc::not_a_divisor, "d must divide q-1");
    return {*this, pow_idx(gen_idx_, Int((q_ - 1) / d))};
}

FieldElement Field::norm(const FieldElement& x, u32 subfield_exp) const {
    if (&x.field() != this) fail(Errc::spec_mismatch, "element from a different field");
    if (subfield_exp == 0 || n_ % subfield_exp != 0) fail(Errc::not_a_divisor, "subfield exponent must divide n");
    u64 sub_q = 1;
    for (u32 i = 0; i < subfield_exp; ++i) sub_q *= p_;
    return {*this, pow_idx(x.index(), Int((q_ - 1) / (sub_q - 1)))};
}

bool Field::is_dth_power(const FieldElement& x, u64 d) const {
    if (&x.field() != this) fail(Errc::spec_mismatch, "element from a different field");
    if (x.is_zero()) fail(Errc::zero_input, "is_dth_power is defined on nonzero elements");
    if (d == 0) fail(Errc::invalid_argument, "d must be positive");
    u64 g = std::gcd(d, q_ - 1);
    return pow_idx(x.index(), Int((q_ - 1) / g)) == 1;
}

// --- FieldElement ---

std::vector<u32> FieldElement::coeffs() const { return f_->coeffs_of(idx_); }

static void check_same(const FieldElement& a, const FieldElement& b) {
    if (&a.field() != &b.field()) fail(Errc::spec_mismatch, "elements from different fields");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field(), a.field().add_idx(a.idx_, b.idx_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field(), a.field().sub_idx(a.idx_, b.idx_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field(), a.field().mul_idx(a.idx_, b.idx_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field(), a.field().mul_idx(a.idx_, a.field().inv_idx(b.idx_))};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.f_ == b.f_ && a.idx_ == b.idx_;
}

FieldElement FieldElement::operator-() const { return {*f_, f_->neg_idx(idx_)}; }

FieldElement FieldElement::inverse() const { return {*f_, f_->inv_idx(idx_)}; }

FieldElement FieldElement::pow(const Int& e) const { return {*f_, f_->pow_idx(idx_, e)}; }

FieldElement FieldElement::frobenius(i64 i) const { return {*f_, f_->frobenius_idx(idx_, i)}; }

} // namespace ppinv
