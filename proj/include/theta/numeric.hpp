#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace theta {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an operation receives input outside its domain
/// (invalid labels, missing edges, zero norms, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Floor of a / b for b > 0.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Ceiling of a / b for b > 0.
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return -floor_div(-a, b);
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(Integer(num), Integer(den));
}

/// "num/den" with den > 0; integers keep the "/1" suffix so the format is uniform.
std::string rational_to_string(const Rational& r);

/// Accepts "num/den" or a bare integer.
Rational parse_rational(const std::string& text);

Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);

double to_double(const Rational& r);

}  // namespace theta
