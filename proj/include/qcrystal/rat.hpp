#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qcrystal {
namespace ratfield {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar.  Always stored in canonical form: positive
/// denominator, gcd(num, den) = 1.
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rat(num, den);
}

/// "num/den" decimal serialization; integers are printed without "/1".
inline std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "a", "-a" or "a/b".
inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(BigInt(s));
  BigInt num(s.substr(0, slash));
  BigInt den(s.substr(slash + 1));
  if (den == 0) throw std::domain_error("rational with zero denominator: " + s);
  return Rat(num, den);
}

}  // namespace ratfield

using ratfield::BigInt;
using ratfield::Rat;
using ratfield::rat_from_string;
using ratfield::rat_to_string;

}  // namespace qcrystal
