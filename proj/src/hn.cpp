#include "theta/hn.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace theta {

Rational Piece::slope() const {
  if (rank <= 0) throw DomainError("slope of a rank-0 piece is undefined");
  return 2 * degree / rank;
}

Piece operator+(const Piece& a, const Piece& b) { return {a.rank + b.rank, a.degree + b.degree}; }

Piece WeightedFiltration::total() const {
  Piece sum;
  for (const auto& jump : jumps) sum = sum + jump.piece;
  return sum;
}

bool WeightedFiltration::all_weights_zero() const {
  return std::all_of(jumps.begin(), jumps.end(), [](const Jump& x) { return x.weight == 0; });
}

std::vector<std::string> filtration_violations(const WeightedFiltration& f) {
  std::vector<std::string> out;
  std::size_t rank_zero = 0;
  for (std::size_t i = 0; i < f.jumps.size(); ++i) {
    if (f.jumps[i].piece.rank < 0) out.push_back("piece " + std::to_string(i) + " has negative rank");
    if (f.jumps[i].piece.rank == 0) ++rank_zero;
    if (i > 0 && !(f.jumps[i - 1].weight < f.jumps[i].weight)) {
      out.push_back("weights not strictly increasing at " + std::to_string(i));
    }
  }
  if (rank_zero > 1) out.push_back("more than one rank-0 piece");
  if (f.j) {
    if (*f.j >= f.jumps.size()) out.push_back("distinguished index out of range");
    else if (f.jumps[*f.j].weight < 0) out.push_back("distinguished weight is negative");
  }
  return out;
}

double NuValue::value() const { return to_double(numerator) / std::sqrt(to_double(radicand)); }

Rational NuValue::signed_square() const {
  const Rational sq = numerator * numerator / radicand;
  return numerator < 0 ? Rational(-sq) : sq;
}

bool operator<(const NuValue& a, const NuValue& b) { return a.signed_square() < b.signed_square(); }

bool operator==(const NuValue& a, const NuValue& b) { return a.signed_square() == b.signed_square(); }

Rational norm_b(const WeightedFiltration& f) {
  Rational sum = 0;
  for (const auto& jump : f.jumps) sum += jump.weight * jump.weight * jump.piece.rank;
  return sum;
}

NuValue nu(const WeightedFiltration& f, const Piece& total, const Rational& alpha) {
  if (f.total() != total) throw DomainError("filtration pieces do not add up to the total");
  const Rational radicand = norm_b(f);
  if (radicand == 0) throw DomainError("nu is undefined: the filtration has zero norm");
  const Rational shift = total.slope() + alpha;
  Rational numerator = 0;
  for (const auto& jump : f.jumps) {
    numerator += jump.weight * (2 * jump.piece.degree - jump.piece.rank * shift);
  }
  return {numerator, radicand};
}

Piece total_of(const std::vector<SlopeRank>& pieces) {
  Piece sum;
  for (const auto& p : pieces) sum = sum + Piece{p.rank, p.slope * p.rank / 2};
  return sum;
}

namespace {

void check_closed_form_shape(const std::vector<SlopeRank>& pieces, const Rational& total_slope,
                       std::optional<std::size_t> j, const Rational& alpha) {
  if (pieces.empty()) throw DomainError("no pieces");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].rank <= 0) throw DomainError("piece ranks must be positive");
    if (i > 0 && !(pieces[i - 1].slope < pieces[i].slope)) {
      throw DomainError("slopes must be strictly increasing");
    }
  }
  if (j) {
    if (*j >= pieces.size()) throw DomainError("distinguished index out of range");
    const Rational floor_at_j = std::max(pieces[*j].slope, Rational(total_slope + alpha));
    if (*j + 1 < pieces.size() && !(pieces[*j + 1].slope > floor_at_j)) {
      throw DomainError("the piece after j must have slope above max(mu_j, mu + alpha)");
    }
  }
}

}  // namespace

WeightedFiltration optimal_weights(const std::vector<SlopeRank>& pieces, const Rational& total_slope,
                                   std::optional<std::size_t> j, const Rational& alpha) {
  check_closed_form_shape(pieces, total_slope, j, alpha);
  WeightedFiltration f;
  f.j = j;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    Rational w = pieces[i].slope - total_slope - alpha;
    if (j && *j == i && w < 0) w = 0;
    f.jumps.push_back({w, Piece{pieces[i].rank, pieces[i].slope * pieces[i].rank / 2}});
  }
  return f;
}

NumericOptimum numeric_maximize(const std::vector<SlopeRank>& pieces, const Rational& total_slope,
                                std::optional<std::size_t> j, const Rational& alpha, double tolerance) {
  check_closed_form_shape(pieces, total_slope, j, alpha);
  const std::size_t k = pieces.size();
  std::vector<double> y(k), r(k);
  double scale = 1;
  for (std::size_t i = 0; i < k; ++i) {
    y[i] = to_double(pieces[i].slope - total_slope - alpha);
    r[i] = static_cast<double>(pieces[i].rank);
    scale = std::max(scale, std::abs(r[i] * y[i]));
  }
  const double tol = tolerance * scale * static_cast<double>(k + 1);

  // Constraint c < k-1 is w_c <= w_{c+1}; constraint k-1 (if j) is w_j >= 0.
  const std::size_t n_constraints = (k - 1) + (j ? 1 : 0);
  for (std::uint32_t active = 0; active < (1u << n_constraints); ++active) {
    const bool clamp = j && (active >> (k - 1)) & 1u;
    std::vector<double> w(k);
    double eta = 0;
    for (std::size_t lo = 0; lo < k;) {
      std::size_t hi = lo;
      while (hi + 1 < k && (active >> hi) & 1u) ++hi;
      double mass = 0, rank = 0;
      bool holds_j = false;
      for (std::size_t t = lo; t <= hi; ++t) {
        mass += r[t] * y[t];
        rank += r[t];
        holds_j = holds_j || (j && *j == t);
      }
      const double value = clamp && holds_j ? 0.0 : mass / rank;
      if (clamp && holds_j) eta = -mass;
      for (std::size_t t = lo; t <= hi; ++t) w[t] = value;
      lo = hi + 1;
    }

    bool ok = !clamp || eta >= -tol;
    if (j && !clamp && w[*j] < -tol) ok = false;
    double lambda = 0;
    for (std::size_t t = 0; ok && t < k; ++t) {
      lambda += r[t] * (y[t] - w[t]) + (clamp && *j == t ? eta : 0.0);
      if (t + 1 == k) {
        ok = std::abs(lambda) <= tol;
      } else if ((active >> t) & 1u) {
        ok = lambda >= -tol;
      } else {
        ok = w[t] <= w[t + 1] + tol && std::abs(lambda) <= tol;
      }
    }
    if (!ok) continue;

    double inner = 0, norm = 0;
    for (std::size_t t = 0; t < k; ++t) {
      inner += r[t] * w[t] * y[t];
      norm += r[t] * w[t] * w[t];
    }
    if (norm <= tol * tol) throw DomainError("no destabilizing direction: the optimal weights vanish");
    NumericOptimum out;
    out.weights = w;
    out.value = inner / std::sqrt(norm);
    out.clamp_multiplier = eta;
    out.clamp_active = clamp && eta > tol;
    return out;
  }
  throw DomainError("numeric_maximize: no active set satisfies the KKT conditions");
}

Piece total_of(const ToyObject& obj) {
  Piece sum;
  for (const auto& c : obj.constituents) sum = sum + c;
  return sum;
}

WeightedFiltration hn_filtration(const ToyObject& obj) {
  if (obj.constituents.empty()) throw DomainError("toy object has no constituents");
  std::map<Rational, Piece> by_slope;
  for (const auto& c : obj.constituents) {
    if (c.rank <= 0) throw DomainError("constituents must have positive rank");
    auto& group = by_slope[c.slope()];
    group = group + c;
  }
  const Rational mu = total_of(obj).slope();
  WeightedFiltration f;
  for (const auto& [slope, piece] : by_slope) f.jumps.push_back({slope - mu, piece});
  return f;
}

bool is_semistable(const ToyObject& obj) { return hn_filtration(obj).jumps.size() == 1; }

GapCertificate mu_max_gap_bound(const ToyObject& obj) {
  const WeightedFiltration hn = hn_filtration(obj);
  const Piece total = total_of(obj);
  GapCertificate cert;
  const Piece& top = hn.jumps.back().piece;
  cert.max_slope_rank = top.rank;
  cert.gap = top.slope() - total.slope();
  if (hn.jumps.size() == 1) return cert;

  WeightedFiltration step;
  step.jumps.push_back({0, total + Piece{-top.rank, -top.degree}});
  step.jumps.push_back({1, top});
  cert.nu = nu(step, total);
  cert.holds = cert.nu->numerator >= 0 && cert.nu->signed_square() >= cert.gap * cert.gap;
  return cert;
}

ToyObject parse_constituents(const std::string& text) {
  ToyObject obj;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw DomainError("constituent '" + item + "' is not rank:degree");
    try {
      std::size_t used = 0;
      const std::string rank_text = item.substr(0, colon);
      const long long rank = std::stoll(rank_text, &used);
      if (used != rank_text.size()) throw std::invalid_argument(rank_text);
      if (rank <= 0) throw DomainError("constituent '" + item + "' must have positive rank");
      obj.constituents.push_back({rank, parse_rational(item.substr(colon + 1))});
    } catch (const std::logic_error&) {
      throw DomainError("constituent '" + item + "' is not rank:degree");
    }
  }
  if (obj.constituents.empty()) throw DomainError("no constituents given");
  return obj;
}

}  // namespace theta
