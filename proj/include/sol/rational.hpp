#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace sol {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sgn(const Rat &r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

inline int sgn(const Int &n) {
    if (n > 0) return 1;
    if (n < 0) return -1;
    return 0;
}

// Parses "a", "-a" or "a/b"; throws std::invalid_argument on malformed input.
Rat parse_rational(const std::string &text);

// Prints "a" for integers, "a/b" otherwise, always in lowest terms.
std::string rational_to_string(const Rat &r);

} // namespace sol
