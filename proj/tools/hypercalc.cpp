// Command-line evaluator for hyperbolic (split-complex) expressions.

#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "hypernum/cli.hpp"

namespace {

constexpr const char* usage =
    "usage: hypercalc [--eval <expr>] [--repl] [--check-transcript <path>]\n"
    "                 [--output-kind auto|float|rational]\n"
    "\n"
    "Evaluates hyperbolic-number expressions such as \"(1+3j)*(2+j)\" or\n"
    "\"inv(2+j)\". With no mode flag, reads one expression per line from\n"
    "standard input. Exit codes: 0 ok, 1 parse error, 2 numeric error,\n"
    "64 bad flags.\n";

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    auto parsed = hypernum::parse_args(args);
    if (const auto* message = std::get_if<std::string>(&parsed)) {
        std::cerr << *message << '\n' << usage;
        return 64;
    }
    return hypernum::run(std::get<hypernum::cli_config>(parsed), std::cin, std::cout,
                         std::cerr);
}
