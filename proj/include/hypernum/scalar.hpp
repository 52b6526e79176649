#pragma once

#include <cstdint>
#include <utility>
#include <variant>

#include "hypernum/error.hpp"
#include "hypernum/rational.hpp"

namespace hypernum {

// The three-level tower; promotion joins toward the widest kind involved.
enum class scalar_kind : int { integer = 0, rational = 1, floating = 2 };

constexpr scalar_kind join(scalar_kind a, scalar_kind b) noexcept {
    return a < b ? b : a;
}

// One number out of the tower: exact 64-bit integer, exact reduced fraction,
// or binary64 float. Values are immutable; operations return fresh ones.
class scalar {
public:
    scalar() : value_(std::int64_t{0}) {}
    scalar(int v) : value_(static_cast<std::int64_t>(v)) {}
    scalar(std::int64_t v) : value_(v) {}
    scalar(rational v) : value_(v) {}
    scalar(double v) : value_(v) {}

    scalar_kind kind() const noexcept { return static_cast<scalar_kind>(value_.index()); }

    std::int64_t as_integer() const { return std::get<std::int64_t>(value_); }
    const rational& as_rational() const { return std::get<rational>(value_); }
    double as_floating() const { return std::get<double>(value_); }

    bool is_zero() const noexcept {
        switch (kind()) {
            case scalar_kind::integer: return as_integer() == 0;
            case scalar_kind::rational: return as_rational().is_zero();
            case scalar_kind::floating: return as_floating() == 0.0;
        }
        return false;
    }

private:
    std::variant<std::int64_t, rational, double> value_;
};

// Value-preserving promotion to a wider (or equal) kind. Exact into rational;
// round-to-nearest-even into floating. Narrowing is not provided.
inline scalar widen(const scalar& s, scalar_kind target) {
    if (s.kind() == target) return s;
    if (s.kind() > target) throw domain_error("narrowing conversion in scalar tower");
    if (target == scalar_kind::rational) return scalar(rational(s.as_integer()));
    return s.kind() == scalar_kind::integer
               ? scalar(static_cast<double>(s.as_integer()))
               : scalar(s.as_rational().to_double());
}

// Widen both arguments to the join of their kinds.
inline std::pair<scalar, scalar> unify(const scalar& a, const scalar& b) {
    const scalar_kind k = join(a.kind(), b.kind());
    return {widen(a, k), widen(b, k)};
}

inline scalar operator-(const scalar& s) {
    switch (s.kind()) {
        case scalar_kind::integer: return scalar(detail::checked_neg(s.as_integer()));
        case scalar_kind::rational: return scalar(-s.as_rational());
        case scalar_kind::floating: return scalar(-s.as_floating());
    }
    throw domain_error("corrupt scalar");
}

inline scalar operator+(const scalar& a, const scalar& b) {
    const auto [x, y] = unify(a, b);
    switch (x.kind()) {
        case scalar_kind::integer: return scalar(detail::checked_add(x.as_integer(), y.as_integer()));
        case scalar_kind::rational: return scalar(x.as_rational() + y.as_rational());
        case scalar_kind::floating: return scalar(x.as_floating() + y.as_floating());
    }
    throw domain_error("corrupt scalar");
}

inline scalar operator-(const scalar& a, const scalar& b) {
    const auto [x, y] = unify(a, b);
    switch (x.kind()) {
        case scalar_kind::integer: return scalar(detail::checked_sub(x.as_integer(), y.as_integer()));
        case scalar_kind::rational: return scalar(x.as_rational() - y.as_rational());
        case scalar_kind::floating: return scalar(x.as_floating() - y.as_floating());
    }
    throw domain_error("corrupt scalar");
}

inline scalar operator*(const scalar& a, const scalar& b) {
    const auto [x, y] = unify(a, b);
    switch (x.kind()) {
        case scalar_kind::integer: return scalar(detail::checked_mul(x.as_integer(), y.as_integer()));
        case scalar_kind::rational: return scalar(x.as_rational() * y.as_rational());
        case scalar_kind::floating: return scalar(x.as_floating() * y.as_floating());
    }
    throw domain_error("corrupt scalar");
}

// Division keeps exact operands exact: integer / integer is the reduced
// fraction. Floating division follows binary64 (zero divisor gives inf/nan).
inline scalar operator/(const scalar& a, const scalar& b) {
    const auto [x, y] = unify(a, b);
    switch (x.kind()) {
        case scalar_kind::integer:
            if (y.as_integer() == 0) throw domain_error("division by zero");
            return scalar(rational(x.as_integer(), y.as_integer()));
        case scalar_kind::rational: return scalar(x.as_rational() / y.as_rational());
        case scalar_kind::floating: return scalar(x.as_floating() / y.as_floating());
    }
    throw domain_error("corrupt scalar");
}

// Value equality across kinds after unification; floating compares by
// binary64 == (so NaN never equals anything, including itself).
inline bool operator==(const scalar& a, const scalar& b) {
    const auto [x, y] = unify(a, b);
    switch (x.kind()) {
        case scalar_kind::integer: return x.as_integer() == y.as_integer();
        case scalar_kind::rational: return x.as_rational() == y.as_rational();
        case scalar_kind::floating: return x.as_floating() == y.as_floating();
    }
    return false;
}

}  // namespace hypernum
