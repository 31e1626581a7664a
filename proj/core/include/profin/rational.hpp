#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace profin {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "num/den" with the denominator always present ("1/1", "0/1").
inline std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  return Rational(num, den);
}

}  // namespace profin
