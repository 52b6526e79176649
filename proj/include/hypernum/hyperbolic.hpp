#pragma once

#include <utility>

#include "hypernum/scalar.hpp"

namespace hypernum {

// z = re + j*jm with j^2 = 1. Both components always share one scalar kind;
// the constructor unifies mixed-kind arguments. Values are immutable.
class hyperbolic {
public:
    hyperbolic() : re_(0), jm_(0) {}

    hyperbolic(const scalar& re, const scalar& jm) {
        auto [x, y] = unify(re, jm);
        re_ = std::move(x);
        jm_ = std::move(y);
    }

    // Embeds the real line: x becomes x + 0j in x's kind.
    hyperbolic(const scalar& re) : hyperbolic(re, scalar(std::int64_t{0})) {}

    const scalar& re() const noexcept { return re_; }
    const scalar& jm() const noexcept { return jm_; }
    scalar_kind kind() const noexcept { return re_.kind(); }

private:
    scalar re_;
    scalar jm_;
};

// The hyperbolic imaginary unit, 0 + 1j in integer kind.
inline hyperbolic unit_j() {
    return hyperbolic(scalar(0), scalar(1));
}

// Componentwise widen; throws on narrowing.
inline hyperbolic coerce(const hyperbolic& h, scalar_kind k) {
    return hyperbolic(widen(h.re(), k), widen(h.jm(), k));
}

inline std::pair<hyperbolic, hyperbolic> unify(const hyperbolic& a, const hyperbolic& b) {
    const scalar_kind k = join(a.kind(), b.kind());
    return {coerce(a, k), coerce(b, k)};
}

inline hyperbolic operator+(const hyperbolic& h) {
    return h;
}

inline hyperbolic operator-(const hyperbolic& h) {
    return hyperbolic(-h.re(), -h.jm());
}

inline hyperbolic operator+(const hyperbolic& a, const hyperbolic& b) {
    return hyperbolic(a.re() + b.re(), a.jm() + b.jm());
}

inline hyperbolic operator-(const hyperbolic& a, const hyperbolic& b) {
    return hyperbolic(a.re() - b.re(), a.jm() - b.jm());
}

inline hyperbolic operator*(const hyperbolic& a, const hyperbolic& b) {
    return hyperbolic(a.re() * b.re() + a.jm() * b.jm(),
                      a.re() * b.jm() + a.jm() * b.re());
}

inline hyperbolic conj(const hyperbolic& h) {
    return hyperbolic(h.re(), -h.jm());
}

// D(z) = re^2 - jm^2; the real part of z * conj(z), multiplicative, and zero
// exactly on the null cone.
inline scalar quad_form(const hyperbolic& h) {
    return h.re() * h.re() - h.jm() * h.jm();
}

// conj(z) / D(z). Integer inputs land in rational kind; floating inputs stay
// floating with no epsilon snapping near the cone.
inline hyperbolic inv(const hyperbolic& h) {
    const scalar q = quad_form(h);
    if (q.is_zero()) throw null_cone_division();
    return hyperbolic(h.re() / q, -(h.jm() / q));
}

inline hyperbolic operator/(const hyperbolic& a, const hyperbolic& b) {
    return a * inv(b);
}

inline bool operator==(const hyperbolic& a, const hyperbolic& b) {
    return a.re() == b.re() && a.jm() == b.jm();
}

// Mixed real (+) hyperbolic arithmetic lifts the scalar onto the real line.
inline hyperbolic operator+(const hyperbolic& a, const scalar& b) { return a + hyperbolic(b); }
inline hyperbolic operator+(const scalar& a, const hyperbolic& b) { return hyperbolic(a) + b; }
inline hyperbolic operator-(const hyperbolic& a, const scalar& b) { return a - hyperbolic(b); }
inline hyperbolic operator-(const scalar& a, const hyperbolic& b) { return hyperbolic(a) - b; }
inline hyperbolic operator*(const hyperbolic& a, const scalar& b) { return a * hyperbolic(b); }
inline hyperbolic operator*(const scalar& a, const hyperbolic& b) { return hyperbolic(a) * b; }
inline hyperbolic operator/(const hyperbolic& a, const scalar& b) { return a / hyperbolic(b); }
inline hyperbolic operator/(const scalar& a, const hyperbolic& b) { return hyperbolic(a) / b; }
inline bool operator==(const hyperbolic& a, const scalar& b) { return a == hyperbolic(b); }
inline bool operator==(const scalar& a, const hyperbolic& b) { return hyperbolic(a) == b; }

}  // namespace hypernum
