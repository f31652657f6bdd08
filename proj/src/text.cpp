#include "ppinv/text.hpp"

#include <charconv>
#include <vector>

#include "ppinv/intmath.hpp"

namespace ppinv {

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

i64 parse_i64(std::string_view s, const char* what) {
    s = strip(s);
    i64 v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        fail(Errc::parse_error, std::string("bad ") + what + " '" + std::string(s) + "'");
    return v;
}

// split on commas that are not inside brackets
std::vector<std::string_view> split_top_level(std::string_view s) {
    std::vector<std::string_view> out;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '[') ++depth;
        else if (s[i] == ']') --depth;
        else if (s[i] == ',' && depth == 0) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    out.push_back(s.substr(start));
    return out;
}

} // namespace

std::string to_string(const Field& f) {
    return std::to_string(f.p()) + "^" + std::to_string(f.n());
}

std::string to_string(const FieldElement& e) {
    const Field& f = e.field();
    auto d = e.coeffs();
    if (f.n() == 1) return std::to_string(d[0]);
    std::string s = "[";
    for (u32 i = 0; i < f.n(); ++i) {
        if (i) s += ',';
        s += std::to_string(d[i]);
    }
    s += ']';
    return s;
}

std::string to_string(const Poly& f) {
    if (f.is_zero()) return to_string(f.field().zero());
    std::string s;
    for (i64 i = 0; i <= f.degree(); ++i) {
        if (i) s += ',';
        s += to_string(f.coeff(static_cast<u64>(i)));
    }
    return s;
}

FieldPtr parse_field(std::string_view text, u64 max_q) {
    auto s = strip(text);
    size_t caret = s.find('^');
    u64 p;
    u32 n = 1;
    if (caret == std::string_view::npos) {
        p = static_cast<u64>(parse_i64(s, "field"));
    } else {
        p = static_cast<u64>(parse_i64(s.substr(0, caret), "field characteristic"));
        i64 nn = parse_i64(s.substr(caret + 1), "field degree");
        if (nn < 1) fail(Errc::parse_error, "field degree must be >= 1");
        n = static_cast<u32>(nn);
    }
    return Field::make(p, n, max_q);
}

FieldElement parse_element(const Field& f, std::string_view text) {
    auto s = strip(text);
    if (s.empty()) fail(Errc::parse_error, "empty element");
    if (s.front() == '[') {
        if (s.back() != ']') fail(Errc::parse_error, "unterminated '[' in element");
        s.remove_prefix(1);
        s.remove_suffix(1);
        std::vector<i64> digits;
        for (auto tok : split_top_level(s)) digits.push_back(parse_i64(tok, "element digit"));
        if (digits.size() > f.n())
            fail(Errc::parse_error, "element has more digits than the extension degree");
        return f.from_coeffs(digits);
    }
    return f.from_int(parse_i64(s, "element"));
}

Poly parse_poly(const Field& f, std::string_view text) {
    auto s = strip(text);
    if (s.empty()) fail(Errc::parse_error, "empty polynomial");
    std::vector<FieldElement> coeffs;
    for (auto tok : split_top_level(s)) coeffs.push_back(parse_element(f, tok));
    return Poly::from_elements(f, coeffs);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << to_string(e); }

std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << to_string(f); }

} // namespace ppinv
