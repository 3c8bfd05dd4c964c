#pragma once

// The numerical invariant nu_alpha on weighted filtrations of pure sheaves,
// reduced to the (rank, degree) data of the graded pieces. Slopes use the
// convention mu = 2 deg / rk. Jump lists are in ascending weight order, and
// weights increase with slope.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "theta/numeric.hpp"

namespace theta {

struct Piece {
  std::int64_t rank = 0;
  Rational degree = 0;

  Rational slope() const;  // 2 deg / rk, requires rank > 0
  friend bool operator==(const Piece&, const Piece&) = default;
};

Piece operator+(const Piece& a, const Piece& b);

struct Jump {
  Rational weight;
  Piece piece;
  friend bool operator==(const Jump&, const Jump&) = default;
};

struct WeightedFiltration {
  std::vector<Jump> jumps;
  std::optional<std::size_t> j;  // distinguished piece, if any

  Piece total() const;
  bool all_weights_zero() const;
  friend bool operator==(const WeightedFiltration&, const WeightedFiltration&) = default;
};

/// Empty when weights strictly increase, at most one piece has rank 0 and w_j >= 0.
std::vector<std::string> filtration_violations(const WeightedFiltration& f);

/// nu = numerator / sqrt(radicand), both kept exact.
struct NuValue {
  Rational numerator;
  Rational radicand;  // > 0

  double value() const;
  /// sign(nu) * nu^2, exact.
  Rational signed_square() const;
};

/// Exact ordering of nu values by cross-multiplied signed squares.
bool operator<(const NuValue& a, const NuValue& b);
bool operator==(const NuValue& a, const NuValue& b);

/// sum_i w_i^2 rk_i
Rational norm_b(const WeightedFiltration& f);

/// sum_m m (2 deg - rk (mu(total) + alpha)) / sqrt(norm_b). Throws DomainError
/// when the pieces do not add up to total or norm_b is zero.
NuValue nu(const WeightedFiltration& f, const Piece& total, const Rational& alpha = 0);

struct SlopeRank {
  Rational slope;
  std::int64_t rank;
};

/// Closed-form maximizer with Q = 1: w_i = mu_i - mu - alpha, w_j = max(mu_j - mu - alpha, 0).
/// Requires slopes strictly increasing and, when j is present, mu_{j+1} > max(mu_j, mu + alpha).
WeightedFiltration optimal_weights(const std::vector<SlopeRank>& pieces, const Rational& total_slope,
                                   std::optional<std::size_t> j, const Rational& alpha = 0);

/// Sum of the pieces, each of degree slope * rank / 2.
Piece total_of(const std::vector<SlopeRank>& pieces);

struct NumericOptimum {
  std::vector<double> weights;  // unit-free; the maximizer is any positive multiple
  double value = 0;
  bool clamp_active = false;  // w_j = 0 binds with a positive multiplier
  double clamp_multiplier = 0;
};

/// Independent maximizer of nu over weakly increasing weights with w_j >= 0:
/// the maximizing direction is the projection of y = mu - mu(total) - alpha
/// onto that cone in the rank-weighted inner product, found by checking the
/// KKT conditions for every active set. Throws DomainError if no active set
/// passes, or if the projection vanishes.
NumericOptimum numeric_maximize(const std::vector<SlopeRank>& pieces, const Rational& total_slope,
                                std::optional<std::size_t> j, const Rational& alpha = 0,
                                double tolerance = 1e-12);

struct ToyObject {
  std::vector<Piece> constituents;  // each of positive rank
};

Piece total_of(const ToyObject& obj);

/// Groups constituents by slope and weights the groups by the closed form.
/// A single-slope object yields one piece of weight 0 (semistable).
WeightedFiltration hn_filtration(const ToyObject& obj);

bool is_semistable(const ToyObject& obj);

struct GapCertificate {
  std::optional<NuValue> nu;  // absent when there is one slope
  Rational gap;               // mu_max - mu
  std::int64_t max_slope_rank = 0;  // rk of the max-slope part U
  bool holds = true;          // nu >= gap
};

/// Single-step filtration by the max-slope part at weight 1.
GapCertificate mu_max_gap_bound(const ToyObject& obj);

/// Parses "r1:d1,r2:d2,...".
ToyObject parse_constituents(const std::string& text);

}  // namespace theta
