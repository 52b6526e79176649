// Acceptance runner: executes every shipped guarantee end to end and prints
// one PASS/FAIL line per criterion. Exit code is the number of failures.
//
//   usage: acceptance <path-to-paper_session.txt>

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hypernum/hypernum.hpp"
#include "support/generators.hpp"

using namespace hypernum;
using testgen::approx_equal;
using testgen::exactly_equal;

namespace {

struct check_failure {
    std::string detail;
};

void require(bool ok, const std::string& detail) {
    if (!ok) throw check_failure{detail};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

hyperbolic h_int(std::int64_t re, std::int64_t jm) {
    return hyperbolic(scalar(re), scalar(jm));
}

const hyperbolic one = h_int(1, 0);

// 1. The paper session transcript replays byte-exactly in under a second.
void criterion_transcript(const std::string& transcript_path) {
    const auto start = std::chrono::steady_clock::now();
    cli_config cfg;
    cfg.mode = cli_mode::check_transcript;
    cfg.transcript_path = transcript_path;
    std::istringstream in;
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(cfg, in, out, err);
    require(code == 0, "transcript replay exited " + std::to_string(code) + "\n" + err.str());
    const double elapsed = seconds_since(start);
    require(elapsed < 1.0, "replay took " + std::to_string(elapsed) + "s");
}

// 2. Ring axioms: exact on 10^4 rational triples, 1e-12 on float triples.
void criterion_ring_axioms() {
    const auto start = std::chrono::steady_clock::now();
    testgen::rng_t rng(0xacc00002);
    for (int i = 0; i < 10000; ++i) {
        const hyperbolic a = testgen::gen_rational_h(rng, 99);
        const hyperbolic b = testgen::gen_rational_h(rng, 99);
        const hyperbolic c = testgen::gen_rational_h(rng, 99);
        require(a + b == b + a, "rational add commutativity");
        require(a * b == b * a, "rational mul commutativity");
        require((a + b) + c == a + (b + c), "rational add associativity");
        require((a * b) * c == a * (b * c), "rational mul associativity");
        require(a * (b + c) == a * b + a * c, "rational distributivity");
    }
    for (int i = 0; i < 10000; ++i) {
        const hyperbolic a = testgen::gen_float_h(rng, -1e3, 1e3);
        const hyperbolic b = testgen::gen_float_h(rng, -1e3, 1e3);
        const hyperbolic c = testgen::gen_float_h(rng, -1e3, 1e3);
        require(a + b == b + a, "float add commutativity");
        require(a * b == b * a, "float mul commutativity");
        require(approx_equal((a + b) + c, a + (b + c), 1e-12), "float add associativity");
        require(approx_equal((a * b) * c, a * (b * c), 1e-12), "float mul associativity");
        require(approx_equal(a * (b + c), a * b + a * c, 1e-12), "float distributivity");
    }
    require(seconds_since(start) < 10.0, "ring axiom suite exceeded 10s");
}

// 3. z * inv(z) = 1 and (a/b) * b = a, exactly, off the null cone.
void criterion_inverse_division() {
    testgen::rng_t rng(0xacc00003);
    int checked = 0;
    while (checked < 10000) {
        const hyperbolic z = testgen::gen_rational_h(rng, 99);
        if (quad_form(z).is_zero()) continue;
        const hyperbolic a = testgen::gen_rational_h(rng, 99);
        ++checked;
        require(z * inv(z) == one, "z * inv(z) != 1 at " + format(z));
        require((a / z) * z == a, "(a/b)*b != a at a=" + format(a) + " b=" + format(z));
    }
}

// 4. quad_form(ab) = quad_form(a) quad_form(b) exactly on rationals.
void criterion_quad_multiplicative() {
    testgen::rng_t rng(0xacc00004);
    for (int i = 0; i < 10000; ++i) {
        const hyperbolic a = testgen::gen_rational_h(rng, 99);
        const hyperbolic b = testgen::gen_rational_h(rng, 99);
        require(quad_form(a * b) == quad_form(a) * quad_form(b),
                "quad form not multiplicative at " + format(a) + ", " + format(b));
    }
}

// 5. Idempotent algebra and the mul-to-componentwise lightcone functor.
void criterion_idempotents() {
    const auto [ep, em] = idempotents();
    require(ep * ep == ep, "e+ not idempotent");
    require(em * em == em, "e- not idempotent");
    require(ep * em == h_int(0, 0), "e+ e- != 0");
    require(ep + em == one, "e+ + e- != 1");
    testgen::rng_t rng(0xacc00005);
    for (int i = 0; i < 10000; ++i) {
        const hyperbolic a = testgen::gen_rational_h(rng, 99);
        const hyperbolic b = testgen::gen_rational_h(rng, 99);
        const auto ca = decompose(a);
        const auto cb = decompose(b);
        const auto cm = decompose(a * b);
        require(cm.u == ca.u * cb.u && cm.v == ca.v * cb.v,
                "decompose does not map mul componentwise");
    }
}

// 6. exp/log/sqrt round-trips and the exp homomorphism, all within 1e-12.
void criterion_elementary_functions() {
    testgen::rng_t rng(0xacc00006);
    for (int i = 0; i < 1000; ++i) {
        const hyperbolic w = testgen::gen_float_h(rng, -3, 3);
        const hyperbolic z = exp(w);
        require(approx_equal(log(z), w, 1e-12), "log(exp(w)) != w");
        require(approx_equal(exp(log(z)), z, 1e-12), "exp(log(z)) != z");
    }
    for (int i = 0; i < 1000; ++i) {
        const double u = testgen::gen_float_range(rng, 0.0, 100.0);
        const double v = testgen::gen_float_range(rng, 0.0, 100.0);
        const hyperbolic z(scalar((u + v) / 2.0), scalar((u - v) / 2.0));
        require(approx_equal(sqrt(z) * sqrt(z), z, 1e-12), "sqrt(z)^2 != z");
    }
    for (int i = 0; i < 1000; ++i) {
        const hyperbolic a = testgen::gen_float_h(rng, -3, 3);
        const hyperbolic b = testgen::gen_float_h(rng, -3, 3);
        require(approx_equal(exp(a + b), exp(a) * exp(b), 1e-12),
                "exp is not a homomorphism");
    }
}

// 7. parse_literal(format(h)) = h per kind; floating bit-identical.
void criterion_text_roundtrip() {
    testgen::rng_t rng(0xacc00007);
    for (int i = 0; i < 10000; ++i) {
        const hyperbolic h(scalar(static_cast<std::int64_t>(rng())),
                           scalar(static_cast<std::int64_t>(rng())));
        require(exactly_equal(parse_literal(format(h)), h), "integer round-trip " + format(h));
    }
    for (int i = 0; i < 10000; ++i) {
        const hyperbolic h(scalar(testgen::gen_rational_full(rng)),
                           scalar(testgen::gen_rational_full(rng)));
        require(exactly_equal(parse_literal(format(h)), h), "rational round-trip " + format(h));
    }
    for (int i = 0; i < 10000; ++i) {
        const hyperbolic h(scalar(testgen::gen_float_bits(rng)),
                           scalar(testgen::gen_float_bits(rng)));
        require(exactly_equal(parse_literal(format(h)), h), "float round-trip " + format(h));
    }
}

// 8. 10^5 fuzzed byte strings parse or fail with a positioned error, in 30s.
void criterion_parser_robustness() {
    const auto start = std::chrono::steady_clock::now();
    testgen::rng_t rng(0xacc00008);
    for (int i = 0; i < 100000; ++i) {
        const std::string s = testgen::gen_fuzz_string(rng, 48);
        try {
            (void)parse_expr(s);
        } catch (const parse_error& e) {
            require(e.position() <= s.size(), "error position beyond input in: " + s);
        }
    }
    const double elapsed = seconds_since(start);
    require(elapsed < 30.0, "fuzzing took " + std::to_string(elapsed) + "s");
}

// 9. Promotion lattice laws, exhaustive; unify symmetry on random pairs.
void criterion_promotion_lattice() {
    constexpr scalar_kind kinds[] = {scalar_kind::integer, scalar_kind::rational,
                                     scalar_kind::floating};
    for (const auto a : kinds) {
        require(join(a, a) == a, "join not idempotent");
        for (const auto b : kinds) {
            require(join(a, b) == join(b, a), "join not commutative");
            for (const auto c : kinds) {
                require(join(join(a, b), c) == join(a, join(b, c)), "join not associative");
            }
        }
    }
    testgen::rng_t rng(0xacc00009);
    const auto gen_any = [&rng]() -> scalar {
        switch (rng() % 3) {
            case 0: return scalar(testgen::gen_int(rng, -1000000, 1000000));
            case 1: return scalar(testgen::gen_rational(rng, 1000000));
            default: return scalar(testgen::gen_float_bits(rng));
        }
    };
    for (int i = 0; i < 10000; ++i) {
        const scalar a = gen_any();
        const scalar b = gen_any();
        const auto [x, y] = unify(a, b);
        const auto [u, v] = unify(b, a);
        require(exactly_equal(x, v) && exactly_equal(y, u), "unify not symmetric");
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <paper_session.txt>\n";
        return 64;
    }
    const std::string transcript = argv[1];

    const std::vector<std::pair<const char*, std::function<void()>>> criteria = {
        {"1. paper transcript replays byte-exactly (<1s)",
         [&] { criterion_transcript(transcript); }},
        {"2. ring axioms: rational exact, float 1e-12 (<10s)", criterion_ring_axioms},
        {"3. inverse/division round-trip exactly on rationals", criterion_inverse_division},
        {"4. quadratic form is multiplicative on rationals", criterion_quad_multiplicative},
        {"5. idempotent algebra and lightcone functor", criterion_idempotents},
        {"6. exp/log/sqrt round-trips within 1e-12", criterion_elementary_functions},
        {"7. text round-trip exact per kind, float bit-identical", criterion_text_roundtrip},
        {"8. parser total over 1e5 fuzzed strings (<30s)", criterion_parser_robustness},
        {"9. promotion lattice laws and unify symmetry", criterion_promotion_lattice},
    };

    int failures = 0;
    for (const auto& [label, fn] : criteria) {
        try {
            fn();
            std::cout << "[PASS] " << label << '\n';
        } catch (const check_failure& f) {
            ++failures;
            std::cout << "[FAIL] " << label << " — " << f.detail << '\n';
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "[FAIL] " << label << " — unexpected exception: " << e.what() << '\n';
        }
    }
    return failures;
}
