#ifndef FOURSYM_RATIONAL_HPP
#define FOURSYM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace foursym {

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator (the backend normalizes on every operation).
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Canonical rendering: "p" for integers, "p/q" otherwise, q > 0.
inline std::string rat_to_string(const Rat& r) {
  const Int num = numerator(r);
  const Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Parses "p" or "p/q". Inverse of rat_to_string.
inline Rat rat_from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw Error("rational with zero denominator: " + s);
  return Rat(num, den);
}

}  // namespace foursym

#endif
