#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace portex {

using Int = boost::multiprecision::cpp_int;
// Arbitrary-precision rational, always normalized with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline std::string render_rational(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

// Accepts "p", "-p", "p/q".
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw Error("rational with zero denominator: " + s);
    return Rational(num, den);
  } catch (const std::exception&) {
    throw Error("malformed rational: " + s);
  }
}

}  // namespace portex
