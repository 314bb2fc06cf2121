// Walks every nonzero nilpotent orbit of sl_n and prints its verdict,
// the number of polarizations, and the wall count of its chamber complex.
//
//   sl_orbits_demo [n]      (default n = 5)

#include <cstdlib>
#include <iostream>

#include "nilcontact/nilcontact.hpp"

int main(int argc, char** argv) {
    using namespace nilcontact;
    const int n = argc > 1 ? std::atoi(argv[1]) : 5;
    if (n < 2 || n > 9) {
        std::cerr << "n must be between 2 and 9\n";
        return 2;
    }
    const SimpleType t = make_type(Family::A, n - 1);
    for (const auto& o : enumerate_orbits(t)) {
        if (is_zero_orbit(o)) continue;
        const auto r = contact_resolution_exists(o, {.seed = 1, .cross_checks = false});
        std::cout << o.text() << "  dim " << r.orbit.dim_orbit << "  " << to_string(r.verdict) << "  polarizations "
                  << r.polarizations.size();
        if (r.chamber_complex) std::cout << "  walls " << r.chamber_complex->walls.size();
        std::cout << "\n";
    }
}
