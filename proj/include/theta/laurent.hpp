#pragma once

// Exact multivariate Laurent polynomials over the integers in the variables
// u, q, zeta, and truncated Laurent series in a single descending variable
// (z, or zeta after adjoining a root of z).

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "theta/numeric.hpp"

namespace theta {

enum class Var : std::uint8_t { u = 0, q = 1, zeta = 2 };

constexpr std::array<Var, 3> kAllVars{Var::u, Var::q, Var::zeta};

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

class Monomial {
 public:
  Monomial() = default;

  static Monomial of(Var v, std::int64_t exponent) {
    Monomial m;
    m.exps_[index(v)] = exponent;
    return m;
  }
  static Monomial uq(std::int64_t u_exp, std::int64_t q_exp) {
    Monomial m;
    m.exps_[index(Var::u)] = u_exp;
    m.exps_[index(Var::q)] = q_exp;
    return m;
  }

  std::int64_t exponent(Var v) const { return exps_[index(v)]; }
  void set_exponent(Var v, std::int64_t e) { exps_[index(v)] = e; }

  bool is_one() const { return exps_ == std::array<std::int64_t, 3>{}; }

  Monomial operator*(const Monomial& other) const;
  Monomial inverse() const;

  // Lexicographic on (u, q, zeta).
  auto operator<=>(const Monomial&) const = default;

 private:
  static constexpr std::size_t index(Var v) { return static_cast<std::size_t>(v); }
  std::array<std::int64_t, 3> exps_{};
};

class LaurentPoly {
 public:
  using Terms = std::map<Monomial, Integer>;

  LaurentPoly() = default;
  LaurentPoly(Integer constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(std::int64_t constant) : LaurentPoly(Integer(constant)) {}  // NOLINT
  explicit LaurentPoly(const Monomial& m, Integer coeff = 1);

  static LaurentPoly monomial(Var v, std::int64_t exponent, Integer coeff = 1) {
    return LaurentPoly(Monomial::of(v, exponent), std::move(coeff));
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const Monomial& m) const;

  /// Adds c·m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Integer& c);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  LaurentPoly pow(unsigned k) const;
  LaurentPoly times(const Monomial& m) const;

  /// True if no term carries a nonzero exponent of v.
  bool free_of(Var v) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  Terms terms_;
};

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b);

enum class SeriesVar : std::uint8_t { z, zeta };

/// A truncated Laurent series sum_d c_d * x^d in a descending variable x.
///
/// Coefficients are known for every exponent above max_exp (where they vanish)
/// and for the trunc exponents max_exp - trunc < d <= max_exp. Anything at or
/// below max_exp - trunc is unknown.
class LaurentSeries {
 public:
  LaurentSeries(std::int64_t max_exp, std::int64_t trunc, SeriesVar var = SeriesVar::z);

  /// The constant series c with window [1 - trunc, 0].
  static LaurentSeries constant(const LaurentPoly& c, std::int64_t trunc,
                                SeriesVar var = SeriesVar::z);

  std::int64_t max_exp() const { return max_exp_; }
  std::int64_t trunc() const { return trunc_; }
  SeriesVar var() const { return var_; }
  /// Smallest exponent whose coefficient is tracked.
  std::int64_t min_tracked() const { return max_exp_ - trunc_ + 1; }
  bool tracks(std::int64_t d) const { return d >= min_tracked(); }

  const std::map<std::int64_t, LaurentPoly>& coeffs() const { return coeffs_; }
  /// Coefficient of x^d; throws DomainError if d lies below the window.
  LaurentPoly coefficient(std::int64_t d) const;
  /// Largest exponent with a nonzero coefficient.
  std::optional<std::int64_t> leading_exp() const;

  /// Adds c to the coefficient of x^d; d must lie inside the window.
  void add_term(std::int64_t d, const LaurentPoly& c);

  /// Multiplication by x^k.
  LaurentSeries shifted(std::int64_t k) const;
  /// Multiplication of every coefficient by a monomial.
  LaurentSeries times(const Monomial& m) const;

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

  /// Exact comparison on the exponents known for both series.
  bool equals_on_overlap(const LaurentSeries& other) const;

  /// Structural identity: same window, variable and coefficients.
  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

 private:
  std::map<std::int64_t, LaurentPoly> coeffs_;
  std::int64_t max_exp_;
  std::int64_t trunc_;
  SeriesVar var_;
};

LaurentSeries series_mul(const LaurentSeries& s, const LaurentSeries& t);

/// (1 - x^-1 * g)^-1 truncated to trunc terms, with max exponent 0.
LaurentSeries geom_invert(const LaurentPoly& g, std::int64_t trunc);

LaurentPoly set_q_to_one(const LaurentPoly& p);
LaurentSeries set_q_to_one(const LaurentSeries& s);

/// Rewrites z^d as zeta^(2ad). The input must be a z-series free of zeta.
LaurentSeries adjoin_zeta(const LaurentSeries& s, std::int64_t a);
/// Inverse of adjoin_zeta: zeta^(2ad) -> z^d. Throws if an exponent is not a
/// multiple of 2a or the window does not align.
LaurentSeries descend_zeta(const LaurentSeries& s, std::int64_t a);

/// A monomial x^k * m in the series variable and the coefficient variables.
struct SeriesMonomial {
  std::int64_t series_exp = 0;
  Monomial coeff;

  LaurentSeries apply(const LaurentSeries& s) const { return s.shifted(series_exp).times(coeff); }
  friend bool operator==(const SeriesMonomial&, const SeriesMonomial&) = default;
};

// Canonical text form. Terms are sorted descending lexicographically on
// (z, u, q, zeta) exponents and joined by " + ", e.g. "-2*z^-1*u^3*q + 1".
// Series end with a " + O(z^k)" marker naming the first untracked exponent.
std::string to_string(const Monomial& m);
std::string to_string(const LaurentPoly& p);
std::string to_string(const LaurentSeries& s);
std::string to_string(const SeriesMonomial& m, SeriesVar var = SeriesVar::z);

LaurentPoly parse_poly(std::string_view text);
LaurentSeries parse_series(std::string_view text);

}  // namespace theta
