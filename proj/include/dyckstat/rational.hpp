#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dyck {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

inline Integer as_integer(const Rational& r) { return numerator(r); }

} // namespace dyck
