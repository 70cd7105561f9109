#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace theta {

// Exact coefficient type. All series arithmetic is over Int; no rounding,
// no modular reduction, no width assumptions.
using Int = boost::multiprecision::cpp_int;

inline std::string to_dec(const Int& v) { return v.str(); }

inline Int parse_dec(const std::string& s) { return Int(s); }

}  // namespace theta
