#pragma once

// Deterministic random-value generators and exact/approximate comparison
// helpers shared by the unit suites and the acceptance runner.

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "hypernum/hyperbolic.hpp"
#include "hypernum/rational.hpp"
#include "hypernum/scalar.hpp"

namespace testgen {

using rng_t = std::mt19937_64;

inline std::int64_t gen_int(rng_t& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Any bit pattern that is a finite double (subnormals included).
inline double gen_float_bits(rng_t& rng) {
    for (;;) {
        const double v = std::bit_cast<double>(rng());
        if (std::isfinite(v)) return v;
    }
}

inline double gen_float_range(rng_t& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline hypernum::rational gen_rational(rng_t& rng, std::int64_t max_component) {
    return hypernum::rational(gen_int(rng, -max_component, max_component),
                              gen_int(rng, 1, max_component));
}

inline hypernum::rational gen_rational_full(rng_t& rng) {
    const auto num = static_cast<std::int64_t>(rng());
    std::int64_t den = gen_int(rng, 1, INT64_MAX);
    return hypernum::rational(num, den);
}

inline hypernum::hyperbolic gen_rational_h(rng_t& rng, std::int64_t max_component) {
    return hypernum::hyperbolic(hypernum::scalar(gen_rational(rng, max_component)),
                                hypernum::scalar(gen_rational(rng, max_component)));
}

inline hypernum::hyperbolic gen_float_h(rng_t& rng, double lo, double hi) {
    return hypernum::hyperbolic(hypernum::scalar(gen_float_range(rng, lo, hi)),
                                hypernum::scalar(gen_float_range(rng, lo, hi)));
}

// Kind and payload identical; floats compared bit for bit, so -0.0 != 0.0 and
// NaN == NaN here.
inline bool exactly_equal(const hypernum::scalar& a, const hypernum::scalar& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case hypernum::scalar_kind::integer: return a.as_integer() == b.as_integer();
        case hypernum::scalar_kind::rational: return a.as_rational() == b.as_rational();
        case hypernum::scalar_kind::floating:
            return std::bit_cast<std::uint64_t>(a.as_floating()) ==
                   std::bit_cast<std::uint64_t>(b.as_floating());
    }
    return false;
}

inline bool exactly_equal(const hypernum::hyperbolic& a, const hypernum::hyperbolic& b) {
    return exactly_equal(a.re(), b.re()) && exactly_equal(a.jm(), b.jm());
}

// Componentwise |delta| <= tol * scale with the scale taken over all four
// components, so cancellation in one component does not blow up the test.
inline bool approx_equal(const hypernum::hyperbolic& a, const hypernum::hyperbolic& b,
                         double tol) {
    const double are = hypernum::widen(a.re(), hypernum::scalar_kind::floating).as_floating();
    const double ajm = hypernum::widen(a.jm(), hypernum::scalar_kind::floating).as_floating();
    const double bre = hypernum::widen(b.re(), hypernum::scalar_kind::floating).as_floating();
    const double bjm = hypernum::widen(b.jm(), hypernum::scalar_kind::floating).as_floating();
    if (!std::isfinite(are) || !std::isfinite(ajm) || !std::isfinite(bre) ||
        !std::isfinite(bjm))
        return false;
    const double scale = std::max({std::fabs(are), std::fabs(ajm), std::fabs(bre),
                                   std::fabs(bjm)});
    if (scale == 0.0) return true;
    return std::fabs(are - bre) <= tol * scale && std::fabs(ajm - bjm) <= tol * scale;
}

// Printable-biased byte soup for parser fuzzing.
inline std::string gen_fuzz_string(rng_t& rng, std::size_t max_len) {
    static constexpr char charset[] = "0123456789+-*/^()j.,eE jconvilqsqrtxypad_//na";
    const std::size_t len = rng() % (max_len + 1);
    std::string s;
    s.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        if (rng() % 8 == 0) {
            s.push_back(static_cast<char>(rng() & 0xff));
        } else {
            s.push_back(charset[rng() % (sizeof charset - 1)]);
        }
    }
    return s;
}

}  // namespace testgen
