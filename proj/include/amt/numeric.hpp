#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace amt {

// Exact arithmetic for coefficients, constants, and witnesses. Programs at
// desk scale stay tiny, but nothing here may silently wrap.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& n) { return n.str(); }

inline std::string to_string(const Rat& q) {
    if (boost::multiprecision::denominator(q) == 1) {
        return boost::multiprecision::numerator(q).str();
    }
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

template <typename T>
int cmp3(const T& a, const T& b) {
    if (a < b) { return -1; }
    if (b < a) { return 1; }
    return 0;
}

} // namespace amt
