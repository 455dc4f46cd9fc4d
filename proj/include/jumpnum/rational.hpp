#pragma once

// Exact arithmetic used throughout: arbitrary-precision integers and
// rationals kept in lowest terms with positive denominator.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "jumpnum/errors.hpp"

namespace jumpnum {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rat& q) { return rat_den(q) == 1; }

inline Int rat_floor(const Rat& q) {
  Int p = rat_num(q), d = rat_den(q);
  Int t = p / d;  // truncates toward zero
  if (p < 0 && t * d != p) --t;
  return t;
}

// "p/q" in lowest terms, plain "p" when q = 1
inline std::string to_string(const Rat& q) {
  std::string s = rat_num(q).str();
  if (!is_integral(q)) s += "/" + rat_den(q).str();
  return s;
}

inline std::string to_string(const Int& v) { return v.str(); }

// Checked narrowing for positions/counts known to be small.
inline long long to_small(const Int& v) {
  if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
    fail(errc::internal_error, "value does not fit a machine integer: " + v.str());
  return v.convert_to<long long>();
}

}  // namespace jumpnum
