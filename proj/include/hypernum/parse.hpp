#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "hypernum/error.hpp"
#include "hypernum/format.hpp"
#include "hypernum/hyperbolic.hpp"

namespace hypernum {

// Single-argument builtins available in expressions.
enum class builtin { conj, inv, exp, log, sqrt, quad };

struct expr;
using expr_ptr = std::unique_ptr<expr>;

struct num_lit {
    scalar value;
};
struct j_const {};
struct negate {
    expr_ptr operand;
};
struct bin_op {
    char op;  // one of + - * / ^
    expr_ptr lhs;
    expr_ptr rhs;
};
struct fn_call {
    builtin fn;
    expr_ptr arg;
};

// Expression node; span is the byte range it covers in the source text.
struct expr {
    std::variant<num_lit, j_const, negate, bin_op, fn_call> node;
    source_span span;
};

namespace detail {

inline bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

inline bool is_space(char c) noexcept {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

inline bool is_ident_start(char c) noexcept {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

inline bool is_ident_char(char c) noexcept { return is_ident_start(c) || is_digit(c); }

inline std::optional<builtin> lookup_builtin(std::string_view name) noexcept {
    if (name == "conj") return builtin::conj;
    if (name == "inv") return builtin::inv;
    if (name == "exp") return builtin::exp;
    if (name == "log") return builtin::log;
    if (name == "sqrt") return builtin::sqrt;
    if (name == "quad") return builtin::quad;
    return std::nullopt;
}

inline std::string_view builtin_name(builtin b) noexcept {
    switch (b) {
        case builtin::conj: return "conj";
        case builtin::inv: return "inv";
        case builtin::exp: return "exp";
        case builtin::log: return "log";
        case builtin::sqrt: return "sqrt";
        case builtin::quad: return "quad";
    }
    return "?";
}

// Shape of one unsigned numeric token. Rational means a contiguous p//q;
// floating means a '.' fraction and/or a well-formed exponent was present.
struct number_token {
    std::size_t num_end = 0;    // end of the leading digit run
    std::size_t den_begin = 0;  // rational only: first denominator digit
    std::size_t end = 0;        // one past the whole token
    bool is_rational = false;
    bool is_floating = false;
};

inline number_token scan_number(std::string_view t, std::size_t pos) noexcept {
    number_token tok;
    std::size_t p = pos;
    while (p < t.size() && is_digit(t[p])) ++p;
    tok.num_end = p;
    if (p + 1 < t.size() && t[p] == '/' && t[p + 1] == '/') {
        tok.is_rational = true;
        tok.den_begin = p + 2;
        p += 2;
        while (p < t.size() && is_digit(t[p])) ++p;
        tok.end = p;
        return tok;
    }
    if (p + 1 < t.size() && t[p] == '.' && is_digit(t[p + 1])) {
        tok.is_floating = true;
        p += 2;
        while (p < t.size() && is_digit(t[p])) ++p;
    }
    if (p < t.size() && (t[p] == 'e' || t[p] == 'E')) {
        std::size_t q = p + 1;
        if (q < t.size() && (t[q] == '+' || t[q] == '-')) ++q;
        if (q < t.size() && is_digit(t[q])) {
            tok.is_floating = true;
            p = q + 1;
            while (p < t.size() && is_digit(t[p])) ++p;
        }
    }
    tok.end = p;
    return tok;
}

inline std::uint64_t parse_u64(std::string_view t, std::size_t b, std::size_t e,
                               std::size_t err_pos, const char* what) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(t.data() + b, t.data() + e, v);
    if (res.ec != std::errc{} || res.ptr != t.data() + e)
        throw parse_error(err_pos, std::string(what) + " out of range");
    return v;
}

inline std::int64_t signed_from_magnitude(std::uint64_t mag, bool negative,
                                          std::size_t err_pos, const char* what) {
    if (negative) {
        if (mag > magnitude(INT64_MIN))
            throw parse_error(err_pos, std::string(what) + " out of range");
        return static_cast<std::int64_t>(0ULL - mag);
    }
    if (mag > static_cast<std::uint64_t>(INT64_MAX))
        throw parse_error(err_pos, std::string(what) + " out of range");
    return static_cast<std::int64_t>(mag);
}

inline double parse_double_token(std::string_view t, std::size_t b, std::size_t e,
                                 std::size_t err_pos) {
    double v = 0;
    const auto res = std::from_chars(t.data() + b, t.data() + e, v);
    if (res.ec == std::errc::result_out_of_range)
        throw parse_error(err_pos, "float literal out of range");
    if (res.ec != std::errc{} || res.ptr != t.data() + e)
        throw parse_error(err_pos, "malformed float literal");
    return v;
}

inline scalar scalar_from_token(std::string_view t, std::size_t start,
                                const number_token& tok, bool negative) {
    if (tok.is_rational) {
        if (tok.end == tok.den_begin)
            throw parse_error(tok.den_begin, "expected digits after '//'");
        const std::uint64_t num_mag = parse_u64(t, start, tok.num_end, start, "rational numerator");
        const std::uint64_t den_mag =
            parse_u64(t, tok.den_begin, tok.end, tok.den_begin, "rational denominator");
        if (den_mag == 0)
            throw parse_error(tok.den_begin, "zero denominator in rational literal");
        if (den_mag > static_cast<std::uint64_t>(INT64_MAX))
            throw parse_error(tok.den_begin, "rational denominator out of range");
        return scalar(rational(signed_from_magnitude(num_mag, negative, start, "rational numerator"),
                               static_cast<std::int64_t>(den_mag)));
    }
    if (tok.is_floating) {
        const double v = parse_double_token(t, start, tok.end, start);
        return scalar(negative ? -v : v);
    }
    return scalar(signed_from_magnitude(parse_u64(t, start, tok.num_end, start, "integer literal"),
                                        negative, start, "integer literal"));
}

// Recursive descent over
//   sum    := term { (+|-) term }
//   term   := factor { (*|/) factor }
//   factor := - factor | power
//   power  := atom [ ^ factor ]            (right-associative)
//   atom   := number [j] | j | name ( sum ) | ( sum )
// Whitespace is free between tokens; a 'j' glued to a number is a coefficient
// literal (3j parses as 3*j). Nesting depth is capped so adversarial input
// fails with a positioned error instead of exhausting the stack.
class expr_parser {
public:
    explicit expr_parser(std::string_view text) : text_(text) {}

    expr parse_full() {
        expr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error(pos_, "unexpected trailing input");
        return e;
    }

    // REPL-level promote(a, b); returns nullopt when the input does not open
    // with the keyword, and commits (raising parse_error) once it does.
    std::optional<std::pair<expr, expr>> parse_promote() {
        skip_ws();
        if (!match_keyword("promote")) return std::nullopt;
        skip_ws();
        expect('(', "expected '(' after 'promote'");
        expr a = parse_sum();
        skip_ws();
        expect(',', "expected ',' in promote(...)");
        expr b = parse_sum();
        skip_ws();
        expect(')', "expected ')'");
        skip_ws();
        if (pos_ != text_.size()) throw parse_error(pos_, "unexpected trailing input");
        return std::make_pair(std::move(a), std::move(b));
    }

private:
    static constexpr int max_depth_ = 256;

    std::string_view text_;
    std::size_t pos_ = 0;
    int depth_ = 0;

    struct depth_guard {
        expr_parser& parser;
        depth_guard(expr_parser& p, std::size_t at) : parser(p) {
            if (parser.depth_ >= max_depth_)
                throw parse_error(at, "expression nested too deeply");
            ++parser.depth_;
        }
        ~depth_guard() { --parser.depth_; }
    };

    void skip_ws() noexcept {
        while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    }

    void expect(char c, const char* msg) {
        if (pos_ >= text_.size() || text_[pos_] != c) throw parse_error(pos_, msg);
        ++pos_;
    }

    bool match_keyword(std::string_view word) noexcept {
        if (text_.substr(pos_, word.size()) != word) return false;
        const std::size_t after = pos_ + word.size();
        if (after < text_.size() && is_ident_char(text_[after])) return false;
        pos_ = after;
        return true;
    }

    static expr make_bin(char op, expr lhs, expr rhs) {
        const source_span sp{lhs.span.begin, rhs.span.end};
        return expr{bin_op{op, std::make_unique<expr>(std::move(lhs)),
                           std::make_unique<expr>(std::move(rhs))},
                    sp};
    }

    expr parse_sum() {
        depth_guard guard(*this, pos_);
        expr lhs = parse_term();
        for (;;) {
            skip_ws();
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                const char op = text_[pos_++];
                lhs = make_bin(op, std::move(lhs), parse_term());
            } else {
                return lhs;
            }
        }
    }

    expr parse_term() {
        expr lhs = parse_factor();
        for (;;) {
            skip_ws();
            if (pos_ < text_.size() && (text_[pos_] == '*' || text_[pos_] == '/')) {
                const char op = text_[pos_++];
                lhs = make_bin(op, std::move(lhs), parse_factor());
            } else {
                return lhs;
            }
        }
    }

    expr parse_factor() {
        depth_guard guard(*this, pos_);
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '-') {
            const std::size_t start = pos_++;
            expr operand = parse_factor();
            const source_span sp{start, operand.span.end};
            return expr{negate{std::make_unique<expr>(std::move(operand))}, sp};
        }
        return parse_power();
    }

    expr parse_power() {
        expr base = parse_atom();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            return make_bin('^', std::move(base), parse_factor());
        }
        return base;
    }

    expr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw parse_error(pos_, "expected operand");
        const char c = text_[pos_];
        if (c == '(') {
            const std::size_t open = pos_++;
            expr inner = parse_sum();
            skip_ws();
            expect(')', "expected ')'");
            inner.span = {open, pos_};
            return inner;
        }
        if (is_digit(c)) return parse_number_atom();
        if (is_ident_start(c)) return parse_ident_atom();
        throw parse_error(pos_, "expected operand");
    }

    expr parse_number_atom() {
        const std::size_t start = pos_;
        const number_token tok = scan_number(text_, pos_);
        scalar value = scalar_from_token(text_, start, tok, false);
        pos_ = tok.end;
        expr lit{num_lit{std::move(value)}, {start, pos_}};
        if (pos_ < text_.size() && text_[pos_] == 'j') {
            const std::size_t jpos = pos_++;
            expr jc{j_const{}, {jpos, pos_}};
            return make_bin('*', std::move(lit), std::move(jc));
        }
        return lit;
    }

    expr parse_ident_atom() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);
        if (name == "j") return expr{j_const{}, {start, pos_}};
        const std::optional<builtin> fn = lookup_builtin(name);
        if (!fn) throw parse_error(start, "unknown identifier '" + std::string(name) + "'");
        skip_ws();
        expect('(', "expected '(' after function name");
        expr arg = parse_sum();
        skip_ws();
        expect(')', "expected ')'");
        return expr{fn_call{*fn, std::make_unique<expr>(std::move(arg))}, {start, pos_}};
    }
};

// Strict inverse of format: <signed scalar><+|-><magnitude>j with no
// whitespace. The unfolded "+-" separator the naive printer would produce is
// accepted as well.
class literal_parser {
public:
    explicit literal_parser(std::string_view text) : text_(text) {}

    hyperbolic parse() {
        bool re_neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            re_neg = text_[pos_] == '-';
            ++pos_;
        }
        const scalar re = parse_magnitude(re_neg);
        if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-'))
            throw parse_error(pos_, "expected '+' or '-' before the jm part");
        bool jm_neg = text_[pos_] == '-';
        ++pos_;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            if (text_[pos_] == '-') jm_neg = !jm_neg;
            ++pos_;
        }
        const scalar jm = parse_magnitude(jm_neg);
        if (pos_ >= text_.size() || text_[pos_] != 'j')
            throw parse_error(pos_, "expected 'j'");
        ++pos_;
        if (pos_ != text_.size()) throw parse_error(pos_, "unexpected trailing input");
        return hyperbolic(re, jm);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    bool match_word(std::string_view word) noexcept {
        if (text_.substr(pos_, word.size()) != word) return false;
        pos_ += word.size();
        return true;
    }

    scalar parse_magnitude(bool negative) {
        if (match_word("inf")) {
            const double v = std::numeric_limits<double>::infinity();
            return scalar(negative ? -v : v);
        }
        if (match_word("nan")) {
            const double v = std::numeric_limits<double>::quiet_NaN();
            return scalar(negative ? -v : v);
        }
        if (pos_ >= text_.size() || !is_digit(text_[pos_]))
            throw parse_error(pos_, "expected a number");
        const number_token tok = scan_number(text_, pos_);
        const scalar s = scalar_from_token(text_, pos_, tok, negative);
        pos_ = tok.end;
        return s;
    }
};

inline std::optional<std::pair<expr, expr>> parse_promote_form(std::string_view text) {
    expr_parser parser(text);
    return parser.parse_promote();
}

}  // namespace detail

// Parses one full expression; any failure is a parse_error whose position is
// a byte offset into the input.
inline expr parse_expr(std::string_view text) {
    detail::expr_parser parser(text);
    return parser.parse_full();
}

// Parses the canonical literal form produced by format().
inline hyperbolic parse_literal(std::string_view text) {
    return detail::literal_parser(text).parse();
}

// Fully parenthesized rendering; re-parsing it evaluates identically.
inline std::string to_text(const expr& e) {
    return std::visit(
        [](const auto& node) -> std::string {
            using node_type = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<node_type, num_lit>) {
                // a negative literal is not an atom; protect its precedence
                if (detail::display_negative(node.value))
                    return "(" + format(node.value) + ")";
                return format(node.value);
            } else if constexpr (std::is_same_v<node_type, j_const>) {
                return "j";
            } else if constexpr (std::is_same_v<node_type, negate>) {
                return "(-" + to_text(*node.operand) + ")";
            } else if constexpr (std::is_same_v<node_type, bin_op>) {
                return "(" + to_text(*node.lhs) + node.op + to_text(*node.rhs) + ")";
            } else {
                return std::string(detail::builtin_name(node.fn)) + "(" + to_text(*node.arg) + ")";
            }
        },
        e.node);
}

}  // namespace hypernum
