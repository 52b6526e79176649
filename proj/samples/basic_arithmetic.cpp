// Tour of the core type: construction, promotion, ring arithmetic, and the
// null cone.

#include <iostream>

#include "hypernum/format.hpp"
#include "hypernum/hyperbolic.hpp"

int main() {
    using namespace hypernum;

    const hyperbolic h(scalar(1), scalar(3));
    const hyperbolic g(scalar(2), scalar(1));
    std::cout << "h       = " << h << '\n';
    std::cout << "g       = " << g << '\n';
    std::cout << "h + g   = " << h + g << '\n';
    std::cout << "h * g   = " << h * g << '\n';
    std::cout << "h / g   = " << h / g << '\n';
    std::cout << "conj(h) = " << conj(h) << '\n';
    std::cout << "inv(g)  = " << inv(g) << '\n';
    std::cout << "D(g)    = " << quad_form(g) << '\n';

    // mixed kinds promote: integer + rational -> rational, then + float -> float
    const hyperbolic r = h + scalar(rational(1, 2));
    std::cout << "h + 1/2 = " << r << '\n';
    std::cout << "  ...as float: " << coerce(r, scalar_kind::floating) << '\n';

    // the null cone is exactly the set of zero divisors
    const hyperbolic cone(scalar(2), scalar(2));
    std::cout << "(2+2j)(2-2j) = " << cone * conj(cone) << '\n';
    try {
        std::cout << inv(cone) << '\n';
    } catch (const null_cone_division& e) {
        std::cout << "inv(2+2j) -> " << e.what() << '\n';
    }
    return 0;
}
