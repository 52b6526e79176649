#pragma once

#include <charconv>
#include <cmath>
#include <ostream>
#include <string>

#include "hypernum/hyperbolic.hpp"

namespace hypernum {

namespace detail {

// Shortest round-trip decimal. A marker ('.', 'e', inf, nan) is kept in the
// text so the floating kind survives re-parsing; "1" would read back integer.
inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    std::string s(buf, res.ptr);
    if (s.find_first_not_of("-0123456789") == std::string::npos) s += ".0";
    return s;
}

inline std::string format_scalar(const scalar& s) {
    switch (s.kind()) {
        case scalar_kind::integer: return std::to_string(s.as_integer());
        case scalar_kind::rational:
            return std::to_string(s.as_rational().num()) + "//" +
                   std::to_string(s.as_rational().den());
        case scalar_kind::floating: return format_double(s.as_floating());
    }
    return {};
}

// |s| rendered without negating in 64-bit space (INT64_MIN has no negation).
inline std::string format_scalar_magnitude(const scalar& s) {
    switch (s.kind()) {
        case scalar_kind::integer: return std::to_string(magnitude(s.as_integer()));
        case scalar_kind::rational:
            return std::to_string(magnitude(s.as_rational().num())) + "//" +
                   std::to_string(s.as_rational().den());
        case scalar_kind::floating: return format_double(std::fabs(s.as_floating()));
    }
    return {};
}

// Sign folded into the separator; floating uses the sign bit so -0.0 survives
// the round trip.
inline bool display_negative(const scalar& s) {
    switch (s.kind()) {
        case scalar_kind::integer: return s.as_integer() < 0;
        case scalar_kind::rational: return s.as_rational().is_negative();
        case scalar_kind::floating: return std::signbit(s.as_floating());
    }
    return false;
}

}  // namespace detail

inline std::string format(const scalar& s) {
    return detail::format_scalar(s);
}

// Canonical text form <re>+<jm>j, with a negative jm folded to <re>-<|jm|>j.
// Exact inverse of parse_literal.
inline std::string format(const hyperbolic& h) {
    const bool neg = detail::display_negative(h.jm());
    return detail::format_scalar(h.re()) + (neg ? '-' : '+') +
           detail::format_scalar_magnitude(h.jm()) + 'j';
}

inline std::ostream& operator<<(std::ostream& os, const scalar& s) {
    return os << format(s);
}

inline std::ostream& operator<<(std::ostream& os, const hyperbolic& h) {
    return os << format(h);
}

}  // namespace hypernum
