#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace diagcat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class Ring { Z, Q };

inline std::string ring_name(Ring r) { return r == Ring::Z ? "Z" : "Q"; }

inline Rat to_rat(const Int& x) { return Rat(x); }

inline bool is_integral(const Rat& x) {
    return boost::multiprecision::denominator(x) == 1;
}

// Throws unless x is an integer.
inline Int to_int(const Rat& x) {
    if (!is_integral(x)) throw std::invalid_argument("to_int: non-integral rational");
    return boost::multiprecision::numerator(x);
}

template <typename T>
constexpr Ring ring_of() {
    if constexpr (std::is_same_v<T, Int>) return Ring::Z;
    else return Ring::Q;
}

}  // namespace diagcat
