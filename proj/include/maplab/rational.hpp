#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace maplab {

/// Arbitrary-precision exact rational.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace maplab
