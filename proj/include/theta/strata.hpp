#pragma once

// Index calculus for the unstable strata of marked pure sheaves of rank N and
// degree d on stable curves of type (g, n, p): stratum labels, the equivalent
// weight vectors in (1/M)Z^{Nh}, weights of the tautological line bundles on
// stratum centers, and the finite enumeration of strata whose twisted weight
// can be nonnegative.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "theta/numeric.hpp"

namespace theta {

struct StrataParams {
  std::int64_t N = 1;
  std::int64_t g = 0;
  std::int64_t n = 0;
  std::int64_t p = 0;
  std::int64_t d = 0;

  StrataParams() = default;
  /// Throws DomainError unless N >= 1, g, n, p >= 0 and h >= 1.
  StrataParams(std::int64_t N_, std::int64_t g_, std::int64_t n_, std::int64_t p_, std::int64_t d_);

  std::int64_t h() const { return 2 * g - 2 + n + p; }
  std::int64_t rank() const { return N * h(); }  // N*h
  std::int64_t M() const;                         // lcm(1, ..., N*h)
  Rational center() const { return make_rational(d, rank()); }  // d/(Nh)
};

/// Smallest parameters with the given polarization rank: N = 1, g = 0, n = rank + 2, p = 0.
StrataParams params_with_rank(std::int64_t rank, std::int64_t d);

struct StratumLabel {
  std::vector<std::int64_t> degrees;
  std::vector<std::int64_t> ranks;
  std::size_t j = 0;
  friend bool operator==(const StratumLabel&, const StratumLabel&) = default;
};

struct WeightVector {
  std::vector<Rational> w;
  std::size_t j_prime = 1;  // 1-based position of the distinguished entry
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// Empty when the label satisfies the sum, rank and slope-chain conditions.
std::vector<std::string> label_violations(const StratumLabel& l, const StrataParams& params);
bool is_valid_label(const StratumLabel& l, const StrataParams& params);

/// Empty when w has the right length, is sorted, lies in (1/M)Z and j' starts a run.
std::vector<std::string> weight_vector_violations(const WeightVector& w, const StrataParams& params);

WeightVector label_to_weights(const StratumLabel& l, const StrataParams& params);

/// Recovers the label by run-length counting. Throws DomainError when w does
/// not encode a stratum, e.g. a recovered degree is not an integer.
StratumLabel weights_to_label(const WeightVector& w, const StrataParams& params);

struct IntInterval {
  Integer lo;
  Integer hi;
  friend bool operator==(const IntInterval&, const IntInterval&) = default;
};

struct RatInterval {
  Rational lo;
  Rational hi;
};

struct CenterWeights {
  std::vector<Integer> v;  // M*(w'_i - d/Nh) per distinct entry
  Integer wt_rk;
  Rational wt_deg;                          // -2M w.(w - (d/Nh)1)
  std::optional<Rational> wt_deg_piecewise;  // from the recovered label, when it exists
  Integer wt_e;
  IntInterval wt_k;
  IntInterval wt_ev;
  RatInterval combined;  // weights of L_lev^a (x) L_rk^b (x) ev^*(V)
};

CenterWeights center_weights(const WeightVector& w, const StrataParams& params, std::int64_t a,
                             std::int64_t b, std::int64_t kappa);

/// M 1.(w - (d/Nh)1) for an arbitrary rational vector.
Rational wt_rk_of(const std::vector<Rational>& w, const StrataParams& params);
/// -2M w.(w - (d/Nh)1) for an arbitrary rational vector.
Rational wt_deg_of(const std::vector<Rational>& w, const StrataParams& params);
/// -2M |w - (d/Nh)1|^2, which equals wt_deg + (2d/Nh) wt_rk.
Rational deviation_term(const std::vector<Rational>& w, const StrataParams& params);

/// -(1/Nh) sum_i 2(Nh d_i - d r_i) v_i - (2d/Nh) wt_rk, using the label's degrees.
Rational wt_deg_piecewise(const StratumLabel& l, const StrataParams& params);

/// Radius around (d/Nh)1 outside which the combined weight interval is
/// strictly negative.
Rational admissibility_radius(const StrataParams& params, std::int64_t a, std::int64_t b,
                              std::int64_t kappa);

struct AdmissibleStratum {
  WeightVector weights;
  StratumLabel label;
  Rational max_weight;  // upper end of the combined interval
};

struct AdmissibleResult {
  Rational radius;
  std::int64_t lattice_radius = 0;  // ceil(M * radius)
  std::uint64_t lattice_points = 0;  // sorted vectors scanned inside the ball
  std::vector<AdmissibleStratum> strata;  // sorted by (w, j')
};

AdmissibleResult admissible_strata(const StrataParams& params, std::int64_t a, std::int64_t b,
                                   std::int64_t kappa);

}  // namespace theta
