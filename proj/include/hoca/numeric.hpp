#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hoca {

using Int = boost::multiprecision::cpp_int;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// Representative of a mod m in [0, m); m == 0 returns a unchanged.
inline Int mod_floor(const Int& a, const Int& m) {
    if (m == 0) return a;
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

// true iff m divides a (m == 0 means a must be 0)
inline bool divides(const Int& m, const Int& a) {
    if (m == 0) return a == 0;
    return a % m == 0;
}

} // namespace hoca
