#pragma once

#include <variant>

#include "hypernum/functions.hpp"
#include "hypernum/parse.hpp"

namespace hypernum {

namespace detail {

inline hyperbolic eval_node(const expr& e);

struct eval_visitor {
    hyperbolic operator()(const num_lit& n) const { return hyperbolic(n.value); }

    hyperbolic operator()(const j_const&) const { return unit_j(); }

    hyperbolic operator()(const negate& n) const { return -eval_node(*n.operand); }

    hyperbolic operator()(const bin_op& b) const {
        if (b.op == '^') {
            const hyperbolic base = eval_node(*b.lhs);
            const hyperbolic exponent = eval_node(*b.rhs);
            if (exponent.kind() != scalar_kind::integer || !exponent.jm().is_zero())
                throw domain_error("exponent must be an integer");
            return pow(base, exponent.re().as_integer());
        }
        const hyperbolic lhs = eval_node(*b.lhs);
        const hyperbolic rhs = eval_node(*b.rhs);
        switch (b.op) {
            case '+': return lhs + rhs;
            case '-': return lhs - rhs;
            case '*': return lhs * rhs;
            case '/': return lhs / rhs;
        }
        throw domain_error("unknown operator");
    }

    hyperbolic operator()(const fn_call& c) const {
        const hyperbolic arg = eval_node(*c.arg);
        switch (c.fn) {
            case builtin::conj: return conj(arg);
            case builtin::inv: return inv(arg);
            case builtin::exp: return hypernum::exp(arg);
            case builtin::log: return hypernum::log(arg);
            case builtin::sqrt: return hypernum::sqrt(arg);
            case builtin::quad: return hyperbolic(quad_form(arg));
        }
        throw domain_error("unknown function");
    }
};

inline hyperbolic eval_node(const expr& e) {
    try {
        return std::visit(eval_visitor{}, e.node);
    } catch (num_error& err) {
        err.attach_span(e.span);  // innermost failing node wins
        throw;
    }
}

}  // namespace detail

// Recursive evaluation; numeric failures carry the source span of the
// innermost failing node.
inline hyperbolic eval(const expr& e) {
    return detail::eval_node(e);
}

}  // namespace hypernum
