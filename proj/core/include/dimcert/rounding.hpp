// Directed rounding by one-ulp outward stepping.
//
// Every derived bound in this library must err on the safe side: upper
// bounds are stepped up by one ulp after each operation, lower bounds
// stepped down. The hat-operator increment theta is required to dominate
// the residual error by two orders of magnitude, so one ulp of slack per
// operation is ample.

#pragma once

#include <cmath>
#include <limits>

namespace dimcert {

inline double up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}

inline double down(double x) {
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

inline double add_up(double a, double b) { return up(a + b); }
inline double add_down(double a, double b) { return down(a + b); }
inline double sub_up(double a, double b) { return up(a - b); }
inline double sub_down(double a, double b) { return down(a - b); }
inline double mul_up(double a, double b) { return up(a * b); }
inline double mul_down(double a, double b) { return down(a * b); }
inline double div_up(double a, double b) { return up(a / b); }
inline double div_down(double a, double b) { return down(a / b); }

// std::pow is not correctly rounded on every libm; step a few ulps.
inline double pow_up(double base, double exponent) {
  double v = std::pow(base, exponent);
  for (int i = 0; i < 4; ++i) v = up(v);
  return v;
}

inline double log_up(double x) { return up(up(std::log(x))); }
inline double log_down(double x) { return down(down(std::log(x))); }

}  // namespace dimcert
