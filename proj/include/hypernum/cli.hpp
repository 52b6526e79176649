#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hypernum/eval.hpp"
#include "hypernum/format.hpp"
#include "hypernum/parse.hpp"

namespace hypernum {

enum class cli_mode { eval_once, repl, check_transcript };

// auto keeps whatever kind the computation produced; float coerces the final
// value; rational additionally audits exactness (a floating result is an
// error because no operation ever narrows).
enum class output_kind { preserve, floating, rational };

struct cli_config {
    cli_mode mode = cli_mode::repl;
    output_kind output = output_kind::preserve;
    std::string expression;       // eval_once
    std::string transcript_path;  // check_transcript
};

namespace detail {

inline hyperbolic apply_output_kind(const hyperbolic& h, output_kind k) {
    switch (k) {
        case output_kind::preserve: return h;
        case output_kind::floating: return coerce(h, scalar_kind::floating);
        case output_kind::rational:
            if (h.kind() == scalar_kind::floating)
                throw domain_error("inexact result in rational output mode");
            return coerce(h, scalar_kind::rational);
    }
    return h;
}

// One input line -> one output line. promote(a, b) is a REPL-level form that
// prints the unified pair as a tuple; everything else is a plain expression.
inline std::string evaluate_input(std::string_view line, output_kind k) {
    if (auto pair = parse_promote_form(line)) {
        const auto [a, b] = hypernum::unify(eval(pair->first), eval(pair->second));
        return "(" + format(apply_output_kind(a, k)) + ", " +
               format(apply_output_kind(b, k)) + ")";
    }
    const expr e = parse_expr(line);
    return format(apply_output_kind(eval(e), k));
}

inline std::string describe(const num_error& e) {
    std::string s = e.what();
    if (const auto* pe = dynamic_cast<const parse_error*>(&e)) {
        s += " at offset " + std::to_string(pe->position());
    } else if (e.span()) {
        s += " at offset " + std::to_string(e.span()->begin) + ".." +
             std::to_string(e.span()->end);
    }
    return s;
}

inline std::string guarded_evaluate(std::string_view line, output_kind k) {
    try {
        return evaluate_input(line, k);
    } catch (const num_error& e) {
        return describe(e);
    }
}

inline void write_caret_diagnostic(std::ostream& err, std::string_view text,
                                   const num_error& e) {
    err << describe(e) << '\n';
    err << "  " << text << '\n';
    std::size_t begin = 0;
    std::size_t width = 1;
    if (const auto* pe = dynamic_cast<const parse_error*>(&e)) {
        begin = pe->position();
    } else if (e.span()) {
        begin = e.span()->begin;
        width = e.span()->end > e.span()->begin ? e.span()->end - e.span()->begin : 1;
    } else {
        return;
    }
    if (begin > text.size()) begin = text.size();
    if (width > text.size() + 1 - begin) width = text.size() + 1 - begin;
    if (width == 0) width = 1;
    err << "  " << std::string(begin, ' ') << std::string(width, '^') << '\n';
}

inline void strip_trailing_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

inline bool is_blank(std::string_view line) noexcept {
    for (const char c : line)
        if (!is_space(c)) return false;
    return true;
}

inline int run_eval_once(const cli_config& cfg, std::ostream& out, std::ostream& err) {
    try {
        out << evaluate_input(cfg.expression, cfg.output) << '\n';
        return 0;
    } catch (const parse_error& e) {
        write_caret_diagnostic(err, cfg.expression, e);
        return 1;
    } catch (const num_error& e) {
        write_caret_diagnostic(err, cfg.expression, e);
        return 2;
    }
}

inline int run_repl(const cli_config& cfg, std::istream& in, std::ostream& out) {
    std::string line;
    while (std::getline(in, line)) {
        strip_trailing_cr(line);
        if (is_blank(line)) continue;
        out << guarded_evaluate(line, cfg.output) << '\n';
    }
    return 0;
}

// Transcript: a line `>> input` immediately followed by one line holding the
// byte-exact expected output; blank lines between pairs are ignored.
inline int run_check_transcript(const cli_config& cfg, std::ostream& out, std::ostream& err) {
    std::ifstream file(cfg.transcript_path);
    if (!file) {
        err << "cannot open transcript: " << cfg.transcript_path << '\n';
        return 2;
    }
    std::string line;
    std::size_t line_no = 0;
    int checked = 0;
    int mismatched = 0;
    while (std::getline(file, line)) {
        ++line_no;
        strip_trailing_cr(line);
        if (is_blank(line)) continue;
        if (!line.starts_with(">> ")) {
            err << cfg.transcript_path << ":" << line_no << ": expected a '>> ' input line\n";
            return 2;
        }
        const std::string input = line.substr(3);
        std::string expected;
        if (!std::getline(file, expected)) {
            err << cfg.transcript_path << ":" << line_no << ": missing expected output line\n";
            return 2;
        }
        ++line_no;
        strip_trailing_cr(expected);
        const std::string actual = guarded_evaluate(input, cfg.output);
        ++checked;
        if (actual != expected) {
            ++mismatched;
            err << cfg.transcript_path << ":" << line_no << ": mismatch\n"
                << "  input:    " << input << '\n'
                << "  expected: " << expected << '\n'
                << "  actual:   " << actual << '\n';
        }
    }
    out << checked - mismatched << "/" << checked << " transcript lines match\n";
    return mismatched == 0 ? 0 : 1;
}

}  // namespace detail

// Flag parsing, kept apart from main() so tests can drive it. Returns the
// config or a usage error message (the caller exits 64 on the latter).
inline std::variant<cli_config, std::string> parse_args(const std::vector<std::string>& args) {
    cli_config cfg;
    bool mode_set = false;
    const auto set_mode = [&](cli_mode m) -> bool {
        if (mode_set) return false;
        mode_set = true;
        cfg.mode = m;
        return true;
    };
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--eval") {
            if (i + 1 >= args.size()) return std::string("--eval requires an expression");
            if (!set_mode(cli_mode::eval_once)) return std::string("conflicting mode flags");
            cfg.expression = args[++i];
        } else if (a == "--repl") {
            if (!set_mode(cli_mode::repl)) return std::string("conflicting mode flags");
        } else if (a == "--check-transcript") {
            if (i + 1 >= args.size()) return std::string("--check-transcript requires a path");
            if (!set_mode(cli_mode::check_transcript)) return std::string("conflicting mode flags");
            cfg.transcript_path = args[++i];
        } else if (a == "--output-kind") {
            if (i + 1 >= args.size())
                return std::string("--output-kind requires auto, float, or rational");
            const std::string& v = args[++i];
            if (v == "auto") {
                cfg.output = output_kind::preserve;
            } else if (v == "float") {
                cfg.output = output_kind::floating;
            } else if (v == "rational") {
                cfg.output = output_kind::rational;
            } else {
                return "unknown output kind: " + v;
            }
        } else {
            return "unknown flag: " + a;
        }
    }
    return cfg;
}

// Exit codes: 0 success, 1 parse failure (or transcript mismatch), 2 numeric
// failure (or unusable transcript file). Bad flags never reach here; the
// caller exits 64 from parse_args.
inline int run(const cli_config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    switch (cfg.mode) {
        case cli_mode::eval_once: return detail::run_eval_once(cfg, out, err);
        case cli_mode::repl: return detail::run_repl(cfg, in, out);
        case cli_mode::check_transcript: return detail::run_check_transcript(cfg, out, err);
    }
    return 64;
}

}  // namespace hypernum
