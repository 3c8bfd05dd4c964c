#include "theta/numeric.hpp"

namespace theta {

std::string rational_to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + text + "'");
    return Rational(Integer(text.substr(0, slash)), den);
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception&) {
    throw DomainError("malformed rational '" + text + "'");
  }
}

Integer floor_of(const Rational& r) {
  Integer n = numerator(r);
  Integer d = denominator(r);
  Integer q = n / d;
  if (n % d != 0 && n < 0) q -= 1;
  return q;
}

Integer ceil_of(const Rational& r) { return -floor_of(-r); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace theta
