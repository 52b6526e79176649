#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "hypernum/error.hpp"

namespace hypernum {

namespace detail {

// |v| as an unsigned value; well-defined for INT64_MIN.
inline std::uint64_t magnitude(std::int64_t v) noexcept {
    return v < 0 ? 0ULL - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer multiplication");
    return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
    if (a == INT64_MIN) throw overflow_error("integer negation");
    return -a;
}

inline int bit_width_u128(unsigned __int128 v) noexcept {
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    if (hi != 0) return 64 + std::bit_width(hi);
    return std::bit_width(static_cast<std::uint64_t>(v));
}

// Correctly rounded n/d for positive n, d (round to nearest, ties to even).
// n is scaled so the 128-bit quotient carries at least 64 significant bits;
// the quotient is then rounded to 53 bits with guard/sticky taken from the
// discarded bits and the division remainder.
inline double ratio_to_double(std::uint64_t n, std::uint64_t d) noexcept {
    using u128 = unsigned __int128;
    const int lz = std::countl_zero(n);
    const u128 scaled = static_cast<u128>(n << lz) << 64;
    const u128 q = scaled / d;
    const auto rem_div = static_cast<std::uint64_t>(scaled % d);
    const int drop = bit_width_u128(q) - 53;  // >= 11: q has >= 64 bits
    const u128 half = u128{1} << (drop - 1);
    const u128 low = q & ((u128{1} << drop) - 1);
    auto keep = static_cast<std::uint64_t>(q >> drop);
    const bool sticky = rem_div != 0 || (low & (half - 1)) != 0;
    if ((low & half) != 0 && (sticky || (keep & 1) != 0)) ++keep;
    return std::ldexp(static_cast<double>(keep), drop - 64 - lz);
}

}  // namespace detail

// Exact fraction of 64-bit integers, kept fully reduced with den > 0; zero is
// canonically 0/1. Component overflow raises overflow_error, never wraps.
class rational {
public:
    rational() = default;

    rational(std::int64_t num, std::int64_t den = 1) {
        if (den == 0) throw domain_error("rational with zero denominator");
        std::uint64_t un = detail::magnitude(num);
        std::uint64_t ud = detail::magnitude(den);
        const std::uint64_t g = std::gcd(un, ud);
        un /= g;
        ud /= g;
        const bool negative = (num < 0) != (den < 0) && un != 0;
        if (ud > static_cast<std::uint64_t>(INT64_MAX))
            throw overflow_error("rational denominator");
        if (un > detail::magnitude(negative ? INT64_MIN : INT64_MAX))
            throw overflow_error("rational numerator");
        num_ = negative ? static_cast<std::int64_t>(0ULL - un) : static_cast<std::int64_t>(un);
        den_ = static_cast<std::int64_t>(ud);
    }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_negative() const noexcept { return num_ < 0; }

    // Round-to-nearest-even conversion, correctly rounded for every value.
    double to_double() const noexcept {
        if (num_ == 0) return 0.0;
        const double v = detail::ratio_to_double(detail::magnitude(num_),
                                                 static_cast<std::uint64_t>(den_));
        return num_ < 0 ? -v : v;
    }

    friend bool operator==(const rational&, const rational&) = default;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline rational operator-(const rational& a) {
    return rational(detail::checked_neg(a.num()), a.den());
}

inline rational operator+(const rational& a, const rational& b) {
    // t/lcm with the shared denominator factor divided out first
    const std::int64_t g = std::gcd(a.den(), b.den());
    const std::int64_t num = detail::checked_add(detail::checked_mul(a.num(), b.den() / g),
                                                 detail::checked_mul(b.num(), a.den() / g));
    const std::int64_t den = detail::checked_mul(a.den(), b.den() / g);
    return rational(num, den);
}

inline rational operator-(const rational& a, const rational& b) {
    const std::int64_t g = std::gcd(a.den(), b.den());
    const std::int64_t num = detail::checked_sub(detail::checked_mul(a.num(), b.den() / g),
                                                 detail::checked_mul(b.num(), a.den() / g));
    const std::int64_t den = detail::checked_mul(a.den(), b.den() / g);
    return rational(num, den);
}

inline rational operator*(const rational& a, const rational& b) {
    // cross-reduce before multiplying to dodge avoidable overflow
    const auto g1 = static_cast<std::int64_t>(
        std::gcd(detail::magnitude(a.num()), static_cast<std::uint64_t>(b.den())));
    const auto g2 = static_cast<std::int64_t>(
        std::gcd(detail::magnitude(b.num()), static_cast<std::uint64_t>(a.den())));
    return rational(detail::checked_mul(a.num() / g1, b.num() / g2),
                    detail::checked_mul(a.den() / g2, b.den() / g1));
}

inline rational reciprocal(const rational& a) {
    if (a.is_zero()) throw domain_error("division by zero");
    return rational(a.den(), a.num());
}

inline rational operator/(const rational& a, const rational& b) {
    return a * reciprocal(b);
}

}  // namespace hypernum
