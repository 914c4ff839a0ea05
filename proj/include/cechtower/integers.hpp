// Exact arbitrary-precision integers used throughout the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cechtower {

using Int = boost::multiprecision::cpp_int;

// Least non-negative residue of a mod m (m > 0).
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

}  // namespace cechtower
