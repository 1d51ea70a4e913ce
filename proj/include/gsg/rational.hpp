#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace gsg {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Canonical num/den rational. Throws std::invalid_argument on den == 0.
Rational rat(long num, long den = 1);

/// "num/den" with the sign on the numerator; integers print as "n/1".
std::string to_string(const Rational& q);

/// Parses "num/den" or "num".
Rational parse_rational(const std::string& text);

double to_double(const Rational& q);

/// Exact binary value of a finite double.
Rational from_double(double x);

}  // namespace gsg
