#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "wedderkit/errors.hpp"

namespace wedderkit {

// Exact arbitrary-precision arithmetic. Rational values are always kept
// normalized (reduced, positive denominator) by the backing type.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& q) { return numerator(q); }
inline BigInt rat_den(const Rational& q) { return denominator(q); }

// "p" for integers, "p/q" otherwise.
inline std::string rational_to_string(const Rational& q) {
  if (rat_den(q) == 1) return rat_num(q).str();
  return rat_num(q).str() + "/" + rat_den(q).str();
}

inline Rational rational_from_string(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw InvalidArgument("rational with zero denominator: " + s);
    return Rational(num, den);
  } catch (const std::exception& e) {
    throw ParseError("bad rational literal '" + s + "': " + e.what());
  }
}

}  // namespace wedderkit
