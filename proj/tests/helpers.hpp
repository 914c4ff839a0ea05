// Shared deterministic generators for the test suites.
#pragma once

#include <random>

#include "cechtower/cochain.hpp"

namespace cechtower::testing {

inline int pick(std::mt19937_64& gen, int lo, int hi) {
    return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Cochain random_cochain(std::mt19937_64& gen, const ComplexPtr& x, const AbelianGroup& g,
                              int degree, int amp = 5) {
    Cochain c(x, g, degree);
    for (const Simplex& s : x->simplices(degree)) {
        std::vector<Int> coords(g.coord_count());
        for (auto& v : coords) v = pick(gen, -amp, amp);
        c.set_value(s, std::move(coords));
    }
    return c;
}

}  // namespace cechtower::testing
