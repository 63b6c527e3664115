#pragma once

#include <boost/rational.hpp>

namespace trispec {

// Exact scalar used wherever a branch must not depend on floating point:
// geometry classification, sawtooth values, census angles.
using Rational = boost::rational<long long>;

// floor(x); boost::rational keeps denominators positive.
inline long long floor_rat(const Rational& x) {
  long long n = x.numerator(), d = x.denominator();
  long long q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

inline bool is_integer(const Rational& x) { return x.denominator() == 1; }

inline double to_double(const Rational& x) {
  return static_cast<double>(x.numerator()) / static_cast<double>(x.denominator());
}

// Best rational approximation of x with denominator <= max_den, by the
// continued-fraction convergent/semiconvergent construction.
Rational nearest_rational(double x, long long max_den);

}  // namespace trispec
