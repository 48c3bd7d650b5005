// Minimal tour: the classical t = 3, u = 1 unit (3 - sqrt 5)/2 seen three
// ways — Newton iterates, ascending series, and its Hurwitz word.

#include <iostream>

#include "quadcf/quadcf.hpp"

int main() {
    using namespace quadcf;
    const LatticeKind G = LatticeKind::Gaussian;
    QuadParams p = QuadParams::admissible_l2(LatticePoint{G, 3, 0},
                                             UnitValue{LatticePoint{G, 1, 0}});

    NewtonTrace tr = newton_trace(p, NewtonStartConcrete::AtZero, 4);
    std::cout << "Newton iterates from 0:";
    for (const auto& it : tr.iterates) std::cout << " " << rational_string(it.x());
    std::cout << "\n";

    for (unsigned n = 0; n <= 3; ++n)
        std::cout << "S_" << n << "(3,1) = " << rational_string(sierpinski_value(p, n).x())
                  << "\n";

    CFWord word = hurwitz_expand(QuadExtElement::alpha(p), 8);
    std::cout << "Hurwitz word: " << word.str() << "\n";

    Ball alpha = roots_numeric(p, 128).first;
    std::cout << "alpha = " << decimal_string(alpha.re(), 30) << " +/- "
              << decimal_string_upper(alpha.radius(), 30) << "\n";
    return 0;
}
