#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace hypernum {

// Half-open byte range [begin, end) into the source text of an expression.
struct source_span {
    std::size_t begin = 0;
    std::size_t end = 0;
};

// Base of every failure the library reports. Evaluation attaches the span of
// the failing expression node; the innermost node wins.
class num_error : public std::runtime_error {
public:
    explicit num_error(const std::string& what) : std::runtime_error(what) {}

    const std::optional<source_span>& span() const noexcept { return span_; }

    void attach_span(source_span s) noexcept {
        if (!span_) span_ = s;
    }

private:
    std::optional<source_span> span_;
};

// Divisor lies on the null cone: its quadratic form is exactly zero.
class null_cone_division : public num_error {
public:
    null_cone_division()
        : num_error("null-cone division: divisor has zero quadratic form") {}
};

// Operation applied outside its domain (narrowing widen, zero denominator,
// log/sqrt off the right wedge, non-integer exponent, ...).
class domain_error : public num_error {
public:
    explicit domain_error(const std::string& context)
        : num_error("domain error: " + context) {}
};

// Checked 64-bit integer or rational-component arithmetic overflowed.
class overflow_error : public num_error {
public:
    explicit overflow_error(const std::string& context)
        : num_error("overflow: " + context) {}
};

// Text could not be parsed; position is a byte offset into the input.
class parse_error : public num_error {
public:
    parse_error(std::size_t position, const std::string& message)
        : num_error("parse error: " + message), position_(position) {
        attach_span({position, position + 1});
    }

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace hypernum
