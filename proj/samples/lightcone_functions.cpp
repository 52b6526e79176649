// The idempotent basis diagonalizes multiplication, which is what makes
// exp/log/sqrt one-liners in lightcone coordinates.

#include <iostream>

#include "hypernum/format.hpp"
#include "hypernum/functions.hpp"

int main() {
    using namespace hypernum;

    const auto [ep, em] = idempotents();
    std::cout << "e+      = " << ep << '\n';
    std::cout << "e-      = " << em << '\n';
    std::cout << "e+ * e+ = " << ep * ep << '\n';
    std::cout << "e+ * e- = " << ep * em << '\n';
    std::cout << "e+ + e- = " << ep + em << '\n';

    const hyperbolic z(scalar(1), scalar(3));
    const lightcone_coords c = decompose(z);
    std::cout << "z = " << z << "  ->  u = " << c.u << ", v = " << c.v << '\n';
    std::cout << "recompose(u, v) = " << recompose(c) << '\n';

    const hyperbolic w(scalar(0.3), scalar(0.7));
    std::cout << "exp(w)          = " << exp(w) << '\n';
    std::cout << "log(exp(w))     = " << log(exp(w)) << '\n';
    std::cout << "sqrt(5+3j)^2    = " << pow(sqrt(hyperbolic(scalar(5), scalar(3))), 2) << '\n';
    return 0;
}
