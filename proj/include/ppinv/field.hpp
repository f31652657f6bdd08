#ifndef PPINV_FIELD_HPP
#define PPINV_FIELD_HPP

#include <memory>
#include <span>
#include <vector>

#include "common.hpp"

namespace ppinv {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// An element of F_{p^n}, stored as the base-p encoding of its coefficient
/// vector (c_0 + c_1*p + ... + c_{n-1}*p^{n-1}). Equal index <=> equal
/// coefficient vector, so comparison is canonical.
class FieldElement {
public:
    FieldElement(const Field& f, u32 idx) : f_(&f), idx_(idx) {}

    const Field& field() const { return *f_; }
    u32 index() const { return idx_; }
    std::vector<u32> coeffs() const; // length n, low-to-high
    bool is_zero() const { return idx_ == 0; }

    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(const Int& e) const;
    FieldElement frobenius(i64 i) const; // x^(p^i), i reduced mod n

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    const Field* f_;
    u32 idx_;
};

/// A concrete finite field F_{p^n} with its canonical modulus polynomial.
///
/// Construction picks the canonical modulus: the first monic irreducible of
/// degree n over F_p when coefficient vectors (c_0,...,c_{n-1}) are compared
/// lexicographically. Prime fields are the n = 1 case with modulus x.
/// Instances are cached per (p, n), so two fields with equal parameters are
/// the same object. Immutable after construction and safe to share across
/// threads; all operations are pure.
class Field {
public:
    static constexpr u64 kDefaultMaxQ = u64(1) << 20;
    static constexpr u64 kHardMaxQ = u64(1) << 22; // lookup tables get large beyond this

    /// Field of order p^n. Throws NotPrime / SizeExceeded.
    static FieldPtr make(u64 p, u32 n, u64 max_q = kDefaultMaxQ);

    u64 p() const { return p_; }
    u32 n() const { return n_; }
    u64 q() const { return q_; }
    /// Monic modulus polynomial, coefficients low-to-high, length n+1.
    const std::vector<u32>& modulus() const { return modulus_; }

    // --- element construction ---
    FieldElement zero() const { return {*this, 0}; }
    FieldElement one() const { return {*this, 1}; }
    FieldElement element(u64 idx) const;
    FieldElement from_int(i64 v) const; // v mod p, embedded as a constant
    FieldElement from_coeffs(std::span<const i64> digits) const;
    /// The class of x in F_p[x]/(modulus); equals zero's successor basis elt for n >= 2.
    FieldElement x() const;
    /// Canonical generator of the multiplicative group: first element of
    /// order q-1 in canonical element order.
    FieldElement generator() const { return {*this, gen_idx_}; }

    /// Element of multiplicative order exactly d, derived from the canonical
    /// generator as g^((q-1)/d). Throws NotADivisor unless d | q-1.
    FieldElement primitive_root_of_unity(u64 d) const;

    /// Norm down to the subfield F_{p^e}: x^((q-1)/(p^e-1)). Requires e | n.
    FieldElement norm(const FieldElement& x, u32 subfield_exp) const;

    /// True iff nonzero x is a d-th power; d is reduced to gcd(d, q-1).
    bool is_dth_power(const FieldElement& x, u64 d) const;

    // --- index-level arithmetic (used by the polynomial layer) ---
    u32 add_idx(u32 a, u32 b) const {
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[static_cast<size_t>(a) * q_ + b];
        return add_idx_slow(a, b);
    }
    u32 neg_idx(u32 a) const { return neg_table_[a]; }
    u32 sub_idx(u32 a, u32 b) const { return add_idx(a, neg_table_[b]); }
    u32 mul_idx(u32 a, u32 b) const {
        if (a == 0 || b == 0) return 0;
        return exp_table_[static_cast<size_t>(log_table_[a]) + log_table_[b]];
    }
    u32 inv_idx(u32 a) const;
    u32 pow_idx(u32 a, const Int& e) const;
    u32 frobenius_idx(u32 a, i64 i) const;

    std::vector<u32> coeffs_of(u32 idx) const;
    u32 idx_of_coeffs(std::span<const u32> digits) const;

    /// Rank of an element in canonical order (lexicographic on (c_0,...,c_{n-1})).
    u64 canonical_rank(u32 idx) const;
    u32 idx_at_rank(u64 rank) const;

    // schoolbook multiplication mod the modulus; table-free reference path
    u32 mul_idx_schoolbook(u32 a, u32 b) const;

    ~Field() = default;
    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field(u64 p, u32 n, u64 max_q);
    u32 add_idx_slow(u32 a, u32 b) const;
    void find_canonical_modulus();
    void find_generator_and_tables();

    u64 p_;
    u32 n_;
    u64 q_;
    std::vector<u32> modulus_;  // length n+1, monic
    std::vector<u64> stride_;   // p^i for i = 0..n
    u32 gen_idx_ = 0;
    std::vector<u32> exp_table_; // g^k for k in [0, 2(q-1))
    std::vector<u32> log_table_; // discrete log base g; log[0] unused
    std::vector<u32> neg_table_;
    std::vector<u32> add_table_; // full table for small q, empty otherwise
};

} // namespace ppinv

#endif
