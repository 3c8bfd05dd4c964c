#include "theta/strata.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace theta {

StrataParams::StrataParams(std::int64_t N_, std::int64_t g_, std::int64_t n_, std::int64_t p_,
                           std::int64_t d_)
    : N(N_), g(g_), n(n_), p(p_), d(d_) {
  if (N < 1) throw DomainError("rank N must be at least 1");
  if (g < 0 || n < 0 || p < 0) throw DomainError("g, n and p must be nonnegative");
  if (h() < 1) {
    throw DomainError("h = 2g - 2 + n + p must be at least 1 (got " + std::to_string(h()) + ")");
  }
  if (rank() > 40) throw DomainError("N*h above 40 makes lcm(1..N*h) overflow");
}

std::int64_t StrataParams::M() const {
  std::int64_t m = 1;
  for (std::int64_t k = 2; k <= rank(); ++k) m = std::lcm(m, k);
  return m;
}

StrataParams params_with_rank(std::int64_t rank, std::int64_t d) {
  return StrataParams(1, 0, rank + 2, 0, d);
}

namespace {

// Small exact fraction for the hot validity checks; denominators stay tiny.
struct Frac {
  std::int64_t num;
  std::int64_t den;  // > 0
};

bool less(const Frac& x, const Frac& y) {
  return static_cast<__int128>(x.num) * y.den < static_cast<__int128>(y.num) * x.den;
}

Frac max_frac(const Frac& x, const Frac& y) { return less(x, y) ? y : x; }

std::vector<Frac> chain_values(const StratumLabel& l, const StrataParams& params) {
  std::vector<Frac> out;
  out.reserve(l.degrees.size());
  for (std::size_t i = 0; i < l.degrees.size(); ++i) {
    Frac s{l.degrees[i], l.ranks[i]};
    if (i == l.j) s = max_frac(s, Frac{params.d, params.rank()});
    out.push_back(s);
  }
  return out;
}

// Shared by the diagnostic and the fast boolean check; messages are only
// formatted when a sink is supplied.
bool check_label(const StratumLabel& l, const StrataParams& params, std::vector<std::string>* out) {
  bool ok = true;
  auto fail = [&](auto&& message) {
    ok = false;
    if (out) out->push_back(message());
    return out != nullptr;
  };
  if (l.degrees.empty() && !fail([] { return std::string("label has no pieces"); })) return false;
  if (l.degrees.size() != l.ranks.size() &&
      !fail([] { return std::string("degrees and ranks differ in length"); })) {
    return false;
  }
  if (!ok) return false;
  if (l.j >= l.degrees.size() && !fail([] { return std::string("distinguished index j out of range"); })) {
    return false;
  }
  std::int64_t deg_sum = 0;
  std::int64_t rank_sum = 0;
  for (std::size_t i = 0; i < l.ranks.size(); ++i) {
    if (l.ranks[i] <= 0 && !fail([&] { return "rank r_" + std::to_string(i) + " is not positive"; })) {
      return false;
    }
    deg_sum += l.degrees[i];
    rank_sum += l.ranks[i];
  }
  if (deg_sum != params.d && !fail([&] {
        return "degrees sum to " + std::to_string(deg_sum) + ", expected " + std::to_string(params.d);
      })) {
    return false;
  }
  if (rank_sum != params.rank() && !fail([&] {
        return "ranks sum to " + std::to_string(rank_sum) + ", expected " + std::to_string(params.rank());
      })) {
    return false;
  }
  if (!ok) return false;
  const auto s = chain_values(l, params);
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!less(s[i - 1], s[i]) &&
        !fail([&] { return "slope chain not strictly increasing at piece " + std::to_string(i); })) {
      return false;
    }
  }
  return ok;
}

}  // namespace

std::vector<std::string> label_violations(const StratumLabel& l, const StrataParams& params) {
  std::vector<std::string> out;
  check_label(l, params, &out);
  return out;
}

bool is_valid_label(const StratumLabel& l, const StrataParams& params) {
  return check_label(l, params, nullptr);
}

std::vector<std::string> weight_vector_violations(const WeightVector& w, const StrataParams& params) {
  std::vector<std::string> out;
  const auto len = static_cast<std::size_t>(params.rank());
  if (w.w.size() != len) {
    out.push_back("weight vector has " + std::to_string(w.w.size()) + " entries, expected " +
                  std::to_string(len));
    return out;
  }
  const Integer M = params.M();
  for (std::size_t i = 0; i < len; ++i) {
    if (denominator(Rational(w.w[i] * M)) != 1) out.push_back("entry " + std::to_string(i + 1) + " is not in (1/M)Z");
    if (i > 0 && w.w[i] < w.w[i - 1]) out.push_back("entries are not weakly increasing at " + std::to_string(i + 1));
  }
  if (w.j_prime < 1 || w.j_prime > len) {
    out.push_back("j' out of range");
  } else if (w.j_prime > 1 && !(w.w[w.j_prime - 1] > w.w[w.j_prime - 2])) {
    out.push_back("j' does not start a run of equal entries");
  }
  return out;
}

WeightVector label_to_weights(const StratumLabel& l, const StrataParams& params) {
  const auto problems = label_violations(l, params);
  if (!problems.empty()) throw DomainError("invalid stratum label: " + problems.front());
  WeightVector out;
  const auto s = chain_values(l, params);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i == l.j) out.j_prime = out.w.size() + 1;
    const Rational value = make_rational(s[i].num, s[i].den);
    out.w.insert(out.w.end(), static_cast<std::size_t>(l.ranks[i]), value);
  }
  return out;
}

namespace {

struct Run {
  std::size_t start;
  std::int64_t length;
  Rational value;
};

std::vector<Run> runs_of(const std::vector<Rational>& w) {
  std::vector<Run> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (out.empty() || w[i] != out.back().value) out.push_back({i, 0, w[i]});
    ++out.back().length;
  }
  return out;
}

}  // namespace

StratumLabel weights_to_label(const WeightVector& w, const StrataParams& params) {
  const auto problems = weight_vector_violations(w, params);
  if (!problems.empty()) throw DomainError("invalid weight vector: " + problems.front());
  const auto runs = runs_of(w.w);
  StratumLabel l;
  Integer rest = params.d;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    l.ranks.push_back(runs[i].length);
    if (runs[i].start == w.j_prime - 1) {
      l.j = i;
      l.degrees.push_back(0);
      continue;
    }
    const Rational deg = runs[i].value * runs[i].length;
    if (denominator(deg) != 1) {
      throw DomainError("recovered degree " + rational_to_string(deg) + " of piece " + std::to_string(i) +
                        " is not an integer");
    }
    l.degrees.push_back(static_cast<std::int64_t>(numerator(deg)));
    rest -= numerator(deg);
  }
  l.degrees[l.j] = static_cast<std::int64_t>(rest);
  const auto label_problems = label_violations(l, params);
  if (!label_problems.empty()) {
    throw DomainError("recovered label is invalid: " + label_problems.front());
  }
  if (label_to_weights(l, params) != w) {
    throw DomainError("recovered degree " + std::to_string(l.degrees[l.j]) +
                      " at the distinguished piece does not reproduce its entry");
  }
  return l;
}

Rational wt_rk_of(const std::vector<Rational>& w, const StrataParams& params) {
  const Rational c = params.center();
  Rational sum = 0;
  for (const auto& x : w) sum += x - c;
  return sum * params.M();
}

Rational wt_deg_of(const std::vector<Rational>& w, const StrataParams& params) {
  const Rational c = params.center();
  Rational dot = 0;
  for (const auto& x : w) dot += x * (x - c);
  return -2 * Rational(params.M()) * dot;
}

Rational deviation_term(const std::vector<Rational>& w, const StrataParams& params) {
  const Rational c = params.center();
  Rational norm = 0;
  for (const auto& x : w) norm += (x - c) * (x - c);
  return -2 * Rational(params.M()) * norm;
}

Rational wt_deg_piecewise(const StratumLabel& l, const StrataParams& params) {
  const WeightVector w = label_to_weights(l, params);
  const auto runs = runs_of(w.w);
  const Integer Nh = params.rank();
  const Rational c = params.center();
  Integer lhs = 0;  // wt(L_deg^{Nh} (x) L_rk^{2d})
  Integer wt_rk = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const Rational v = (runs[i].value - c) * params.M();
    const Integer vi = numerator(v);
    lhs -= 2 * (Nh * l.degrees[i] - Integer(params.d) * l.ranks[i]) * vi;
    wt_rk += Integer(l.ranks[i]) * vi;
  }
  return Rational(lhs - 2 * Integer(params.d) * wt_rk, Nh);
}

CenterWeights center_weights(const WeightVector& w, const StrataParams& params, std::int64_t a,
                             std::int64_t b, std::int64_t kappa) {
  if (a < 1) throw DomainError("a must be at least 1");
  if (kappa < 0) throw DomainError("kappa must be nonnegative");
  const auto problems = weight_vector_violations(w, params);
  if (!problems.empty()) throw DomainError("invalid weight vector: " + problems.front());

  CenterWeights out;
  const Rational c = params.center();
  const auto runs = runs_of(w.w);
  out.wt_rk = 0;
  for (const auto& run : runs) {
    const Integer v = numerator(Rational((run.value - c) * params.M()));
    out.v.push_back(v);
    out.wt_rk += v * run.length;
  }
  out.wt_deg = wt_deg_of(w.w, params);
  try {
    out.wt_deg_piecewise = wt_deg_piecewise(weights_to_label(w, params), params);
  } catch (const DomainError&) {
    out.wt_deg_piecewise.reset();
  }
  out.wt_e = 0;

  const Integer v_min = *std::min_element(out.v.begin(), out.v.end());
  const Integer v_max = *std::max_element(out.v.begin(), out.v.end());
  const Integer pN = Integer(params.p) * params.N;
  out.wt_k = {pN * v_min, pN * v_max};
  const Integer ev = Integer(kappa) * (abs(v_max) + abs(v_min));
  out.wt_ev = {-ev, ev};

  const Rational base = out.wt_deg * a + Rational(out.wt_rk * b);
  out.combined.lo = base - Rational(out.wt_k.hi * a) + Rational(out.wt_ev.lo);
  out.combined.hi = base - Rational(out.wt_k.lo * a) + Rational(out.wt_ev.hi);
  return out;
}

namespace {

std::int64_t isqrt_floor(std::int64_t x) {
  if (x <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

std::int64_t isqrt_ceil(std::int64_t x) {
  const std::int64_t r = isqrt_floor(x);
  return r * r == x ? r : r + 1;
}

}  // namespace

Rational admissibility_radius(const StrataParams& params, std::int64_t a, std::int64_t b,
                              std::int64_t kappa) {
  if (a < 1) throw DomainError("a must be at least 1");
  if (kappa < 0) throw DomainError("kappa must be nonnegative");
  // Upper end of the combined interval at x = w - c1 is at most
  //   -2aM|x|^2 + M(2a|c| sqrt(Nh) + |b| sqrt(Nh) + apN + 2 kappa)|x|.
  const Rational root = isqrt_ceil(params.rank());
  const Rational c = abs(params.center());
  const Rational linear = 2 * a * c * root + Rational(std::llabs(b)) * root +
                          Rational(a * params.p * params.N) + Rational(2 * kappa);
  return linear / (2 * a);
}

AdmissibleResult admissible_strata(const StrataParams& params, std::int64_t a, std::int64_t b,
                                   std::int64_t kappa) {
  AdmissibleResult result;
  result.radius = admissibility_radius(params, a, b, kappa);
  const std::int64_t M = params.M();
  const std::int64_t Nh = params.rank();
  const std::int64_t C = M / Nh * params.d;  // M * d/Nh
  result.lattice_radius = static_cast<std::int64_t>(ceil_of(result.radius * M));
  const std::int64_t L = result.lattice_radius;
  if (std::llabs(C) + L > (std::int64_t{1} << 24)) {
    throw DomainError("lattice ball too large to enumerate");
  }
  const __int128 pN = static_cast<__int128>(params.p) * params.N;

  std::vector<std::int64_t> k(static_cast<std::size_t>(Nh));
  auto visit = [&] {
    ++result.lattice_points;
    __int128 quad = 0;
    __int128 lin = 0;
    for (const auto ki : k) {
      quad += static_cast<__int128>(ki) * (ki - C);
      lin += ki - C;
    }
    const __int128 v_min = k.front() - C;
    const __int128 v_max = k.back() - C;
    auto abs128 = [](__int128 x) { return x < 0 ? -x : x; };
    // M times the upper end of the combined interval.
    const __int128 top = -2 * a * quad +
                         static_cast<__int128>(M) * (b * lin - a * pN * v_min + kappa * (abs128(v_max) + abs128(v_min)));
    if (top < 0) return;

    WeightVector wv;
    for (const auto ki : k) wv.w.push_back(make_rational(ki, M));
    for (std::size_t s = 0; s < k.size(); ++s) {
      if (s > 0 && k[s] == k[s - 1]) continue;
      wv.j_prime = s + 1;
      try {
        StratumLabel label = weights_to_label(wv, params);
        result.strata.push_back({wv, std::move(label), Rational(Integer(static_cast<long long>(top)), M)});
      } catch (const DomainError&) {
      }
    }
  };

  auto descend = [&](auto&& self, std::size_t i, std::int64_t lo, std::int64_t budget) -> void {
    if (i == k.size()) {
      visit();
      return;
    }
    const auto remaining = static_cast<std::int64_t>(k.size() - i);
    const std::int64_t start = std::max(lo, C - isqrt_floor(budget));
    const std::int64_t stop = C + isqrt_floor(budget / remaining);
    for (std::int64_t x = start; x <= stop; ++x) {
      const std::int64_t cost = (x - C) * (x - C);
      if (cost > budget) continue;
      k[i] = x;
      self(self, i + 1, x, budget - cost);
    }
  };
  descend(descend, 0, C - L, L * L);

  std::sort(result.strata.begin(), result.strata.end(), [](const auto& x, const auto& y) {
    if (x.weights.w != y.weights.w) return x.weights.w < y.weights.w;
    return x.weights.j_prime < y.weights.j_prime;
  });
  return result;
}

}  // namespace theta
