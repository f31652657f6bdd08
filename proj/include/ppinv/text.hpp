#ifndef PPINV_TEXT_HPP
#define PPINV_TEXT_HPP

#include <ostream>
#include <string>
#include <string_view>

#include "poly.hpp"

namespace ppinv {

// Text formats used by the CLI and the test data:
//   field    "p^n" (or "p" for a prime field)
//   element  comma-separated base-p digits low-to-high in brackets, "[2,1]";
//            prime-field elements print as bare integers, and bare integers
//            are accepted for any field (embedded as constants)
//   poly     dense low-to-high coefficient list, "0,4,0,3,0,1"
// Negative integers are accepted on input and reduced mod p.

std::string to_string(const Field& f);
std::string to_string(const FieldElement& e);
std::string to_string(const Poly& f);

FieldPtr parse_field(std::string_view text, u64 max_q = Field::kDefaultMaxQ);
FieldElement parse_element(const Field& f, std::string_view text);
Poly parse_poly(const Field& f, std::string_view text);

std::ostream& operator<<(std::ostream& os, const FieldElement& e);
std::ostream& operator<<(std::ostream& os, const Poly& f);

} // namespace ppinv

#endif
