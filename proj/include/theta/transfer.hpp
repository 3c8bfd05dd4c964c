#pragma once

// Rank-1, genus-0 quantum operations at level a: the two-point transfer map
// on characters, its generating series in z^-1, the graded-invariants oracle,
// the difference equation, the zeta normalization and the three-point map.
//
// Characters follow the bracket convention: <n> is the line on which G_m
// acts with weight -n, and u^n in the representation ring stands for <n>.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "theta/laurent.hpp"

namespace theta {

struct TransferParams {
  std::int64_t a;  // level, >= 1
  std::int64_t d;  // degree
  std::int64_t n;  // input character <n>

  TransferParams(std::int64_t a_, std::int64_t d_, std::int64_t n_);

  /// m = (2d + 1)a + n
  std::int64_t m() const { return (2 * d + 1) * a + n; }
};

/// A bigraded line <q_weight, u_weight>.
struct BiWeight {
  std::int64_t q_weight;
  std::int64_t u_weight;
  friend bool operator==(const BiWeight&, const BiWeight&) = default;
};

std::string to_string(const BiWeight& w);  // "⟨q,u⟩"

/// Weights of the three G_m factors.
struct TriGrading {
  std::int64_t w1;
  std::int64_t w2;
  std::int64_t w3;
  friend bool operator==(const TriGrading&, const TriGrading&) = default;
};

/// Weight of the coordinate t on A^1 under G_m^3 in degree d: (-d-1, -1, 1).
TriGrading coordinate_weight(std::int64_t d);
/// Character of the level bundle in degree d: ((d-1)^2, -2d-1, -1).
TriGrading level_weight(std::int64_t d);

/// Closed-form image of <n> in degree d: <-a(d-1)^2 + (d+1)m, a+m> when m <= 0.
std::optional<BiWeight> transfer_two_point(const TransferParams& p);

/// How the first (q) slot of a t-monomial's weight is oriented in the oracle.
///  - kLiteral: t^i contributes <(d+1)i, i, -i>, i.e. the coordinate-function
///    weight (-d-1, -1, 1) used in every slot. Yields <-a(d-1)^2 - (d+1)m, a+m>.
///  - kLineOrientedQ: the q slot uses the orientation of the A^1 line itself,
///    contributing <-(d+1)i, i, -i>. Yields <-a(d-1)^2 + (d+1)m, a+m>.
/// The middle and last slots, and hence presence, agree in both conventions.
enum class QSlotConvention { kLiteral, kLineOrientedQ };

constexpr QSlotConvention kResolvedConvention = QSlotConvention::kLineOrientedQ;

/// Middle-G_m invariants of k[t] twisted by <-a(d-1)^2, m, a>, computed by
/// enumerating t^i for 0 <= i <= |m| + 8.
std::optional<BiWeight> invariants_oracle(const TransferParams& p,
                                          QSlotConvention convention = kResolvedConvention);

enum class QMode { kRetain, kSetToOne };

/// sum_d z^d * q^{q_weight} u^{u_weight}, over the degrees where the transfer
/// is nonzero, truncated to trunc terms below the leading degree.
LaurentSeries gen_series_sum(std::int64_t a, std::int64_t n, std::int64_t trunc,
                             QMode q_mode = QMode::kSetToOne);

/// z^{-c} u^{n+a-2ac} / (1 - z^-1 u^-2a) with c = ceil((n+a)/2a).
LaurentSeries gen_series_closed(std::int64_t a, std::int64_t n, std::int64_t trunc);

/// u^{n-a} / (1 - z^-1 u^-2a), valid for -a < n <= a.
LaurentSeries base_case_series(std::int64_t a, std::int64_t n, std::int64_t trunc);

/// Leading z-exponent of gen_series_sum: -ceil((n+a)/2a).
std::int64_t leading_degree(std::int64_t a, std::int64_t n);

enum class SeriesPresentation { kDegreeSum, kClosedForm, kBaseCase };

std::string to_string(SeriesPresentation p);
LaurentSeries presentation_series(SeriesPresentation p, std::int64_t a, std::int64_t n,
                                  std::int64_t trunc);

/// The monomial mu with lhs = mu * rhs for every n in [n_min, n_max], if one exists.
std::optional<SeriesMonomial> normalization_ratio(SeriesPresentation lhs, SeriesPresentation rhs,
                                                  std::int64_t a, std::int64_t n_min,
                                                  std::int64_t n_max, std::int64_t trunc);

/// Closed form relative to the degree-wise sum (the default reconciliation).
inline std::optional<SeriesMonomial> normalization_ratio(std::int64_t a, std::int64_t n_min,
                                                         std::int64_t n_max, std::int64_t trunc) {
  return normalization_ratio(SeriesPresentation::kClosedForm,
                             SeriesPresentation::kDegreeSum, a, n_min, n_max, trunc);
}

/// I(a, n + 2a) == z^-1 I(a, n) on the common window.
bool check_difference_equation(SeriesPresentation p, std::int64_t a, std::int64_t n,
                               std::int64_t trunc);

/// zeta^{n-a} * adjoin_zeta(gen_series_sum(a, n)).
LaurentSeries zeta_normalized(std::int64_t a, std::int64_t n, std::int64_t trunc);

/// (zeta u)^n / ((zeta u)^a - (zeta u)^-a) expanded to trunc terms.
LaurentSeries zeta_base_identity(std::int64_t a, std::int64_t n, std::int64_t trunc);

/// u^m (x) u^n -> image of u^{m+n} under the two-point map with q = 1.
LaurentSeries transfer_three_point(std::int64_t a, std::int64_t m, std::int64_t n,
                                   std::int64_t trunc);

struct ConsistencyRow {
  TransferParams params;
  std::optional<BiWeight> closed_form;
  std::optional<BiWeight> oracle_resolved;
  std::optional<BiWeight> oracle_literal;
  bool match_resolved;
  bool match_literal;
};

struct ConsistencyReport {
  std::vector<ConsistencyRow> rows;
  std::size_t resolved_mismatches = 0;
  std::size_t literal_mismatches = 0;
  std::optional<SeriesMonomial> closed_over_sum;
  std::optional<SeriesMonomial> base_over_sum;
  std::optional<SeriesMonomial> base_over_closed;
  bool difference_equation_holds = true;
  std::vector<std::string> diagnostics;
};

ConsistencyReport consistency_report(std::int64_t a, std::int64_t n_min, std::int64_t n_max,
                                     std::int64_t d_min, std::int64_t d_max,
                                     std::int64_t trunc = 8);

}  // namespace theta
