#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace jetcalc {

// Exact arithmetic everywhere; no floating point anywhere in the engine.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders as `p` or `p/q`, denominator always positive.
inline std::string to_string(const Rational &q) { return q.str(); }

inline Rational rational(long long num, long long den = 1)
{
	return Rational(Integer(num), Integer(den));
}

} // namespace jetcalc
