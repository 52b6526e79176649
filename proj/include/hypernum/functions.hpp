#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

#include "hypernum/hyperbolic.hpp"

namespace hypernum {

// Null-cone basis change: u = x + y, v = x - y. Multiplication becomes
// componentwise there, which is what makes the functions below closed-form.
struct lightcone_coords {
    scalar u;
    scalar v;
};

inline lightcone_coords decompose(const hyperbolic& z) {
    return {z.re() + z.jm(), z.re() - z.jm()};
}

// x = (u+v)/2, y = (u-v)/2. Integer coordinates land in rational kind
// because the halving is an exact division.
inline hyperbolic recompose(const lightcone_coords& c) {
    const scalar two(2);
    return hyperbolic((c.u + c.v) / two, (c.u - c.v) / two);
}

// e+ = (1+j)/2 and e- = (1-j)/2: the orthogonal idempotents, in rational kind.
inline std::pair<hyperbolic, hyperbolic> idempotents() {
    return {hyperbolic(scalar(rational(1, 2)), scalar(rational(1, 2))),
            hyperbolic(scalar(rational(1, 2)), scalar(rational(-1, 2)))};
}

// exp(x + jy) = e^x (cosh y + j sinh y). Exact inputs are widened first; the
// result is always floating kind.
inline hyperbolic exp(const hyperbolic& z) {
    const hyperbolic f = coerce(z, scalar_kind::floating);
    const double ex = std::exp(f.re().as_floating());
    const double y = f.jm().as_floating();
    return hyperbolic(scalar(ex * std::cosh(y)), scalar(ex * std::sinh(y)));
}

// Inverse of exp on the open right wedge (u > 0 and v > 0 after widening):
// log z = (ln u + ln v)/2 + j (ln u - ln v)/2.
inline hyperbolic log(const hyperbolic& z) {
    const hyperbolic f = coerce(z, scalar_kind::floating);
    const double u = f.re().as_floating() + f.jm().as_floating();
    const double v = f.re().as_floating() - f.jm().as_floating();
    if (!(u > 0.0) || !(v > 0.0)) throw domain_error("log outside the right wedge");
    const double lu = std::log(u);
    const double lv = std::log(v);
    return hyperbolic(scalar((lu + lv) / 2.0), scalar((lu - lv) / 2.0));
}

// Componentwise lightcone root on the closed right wedge (u >= 0, v >= 0).
inline hyperbolic sqrt(const hyperbolic& z) {
    const hyperbolic f = coerce(z, scalar_kind::floating);
    const double u = f.re().as_floating() + f.jm().as_floating();
    const double v = f.re().as_floating() - f.jm().as_floating();
    if (!(u >= 0.0) || !(v >= 0.0)) throw domain_error("sqrt outside the right wedge");
    const double su = std::sqrt(u);
    const double sv = std::sqrt(v);
    return hyperbolic(scalar((su + sv) / 2.0), scalar((su - sv) / 2.0));
}

namespace detail {

inline hyperbolic pow_unsigned(hyperbolic base, std::uint64_t n) {
    hyperbolic acc = coerce(hyperbolic(scalar(1)), base.kind());
    while (n != 0) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n != 0) base = base * base;
    }
    return acc;
}

}  // namespace detail

// Integer power by repeated squaring, kind-preserving for n >= 0; negative
// exponents go through inv and therefore need z off the null cone.
inline hyperbolic pow(const hyperbolic& z, std::int64_t n) {
    if (n < 0) return inv(detail::pow_unsigned(z, detail::magnitude(n)));
    return detail::pow_unsigned(z, static_cast<std::uint64_t>(n));
}

}  // namespace hypernum
