// A short tour of exact arithmetic in Q[zeta_n].

#include <iostream>

#include "cyclowalk/coin.hpp"

int main() {
    using namespace cyclowalk;

    const CycloNum i = zeta(4, 1);
    std::cout << "i^2 = " << i * i << '\n';

    // sqrt(3) = zeta_12 + zeta_12^11, so it lives at level 12
    const CycloNum r3 = sqrt_exact(3);
    std::cout << "sqrt(3) = " << r3 << "  (" << r3.eval().real() << ")\n";
    std::cout << "sqrt(3)^2 = " << r3 * r3 << '\n';

    // zeta_3 seen at level 12, then recovered
    const CycloNum w = embed(zeta(3, 1), 12);
    std::cout << "zeta_3 at level 12 = " << w << '\n';
    std::cout << "descended to level 3 = " << *descend(w, 3) << '\n';
    std::cout << "zeta_12 in Q[zeta_3]? " << (descend(zeta(12, 1), 3) ? "yes" : "no") << '\n';

    // -2/3 is rational but not an algebraic integer
    const CycloNum t = CycloNum::from_rational(2, Rational(-2, 3));
    std::cout << "-2/3 in Z[zeta_2]? " << (in_ring_of_integers(t, 2) ? "yes" : "no") << '\n';
    std::cout << "-2/3 in (1/3)Z[zeta_2]? " << (in_ring_of_integers(t, 2, 3) ? "yes" : "no") << '\n';
}
