#ifndef PPINV_COMMON_HPP
#define PPINV_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ppinv {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Arbitrary-precision integer. Exponents and binomial coefficients routinely
// exceed 64 bits; field element indices never do.
using Int = boost::multiprecision::cpp_int;

enum class Errc {
    not_prime,
    size_exceeded,
    spec_mismatch,
    division_by_zero,
    not_a_divisor,
    zero_input,
    duplicate_point,
    incomplete_domain,
    not_a_permutation,
    nonzero_constant_term,
    field_too_small,
    not_coprime,
    zero_leading_coefficient,
    consistency_failure,
    out_of_range,
    characteristic_divides_d,
    denominator_zero,
    parse_error,
    invalid_argument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

} // namespace ppinv

#endif
