#pragma once

// Exhaustive enumeration of candidate stratum labels: every composition of
// the polarization rank, every degree vector with |d_i| <= bound, every j.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "theta/strata.hpp"

namespace theta::testing {

struct LabelScan {
  std::uint64_t candidates = 0;
  std::uint64_t valid = 0;
};

/// Calls visit(label, params) on every valid label; params carry d = sum of degrees.
inline LabelScan scan_labels(std::int64_t rank, std::int64_t bound,
                             const std::function<void(const StratumLabel&, const StrataParams&)>& visit) {
  LabelScan scan;
  std::vector<StrataParams> by_degree;
  for (std::int64_t d = -bound * rank; d <= bound * rank; ++d) by_degree.push_back(params_with_rank(rank, d));

  StratumLabel l;
  std::function<void(std::int64_t)> ranks = [&](std::int64_t left) {
    if (left == 0) {
      const std::size_t parts = l.ranks.size();
      l.degrees.assign(parts, -bound);
      while (true) {
        std::int64_t d = 0;
        for (auto x : l.degrees) d += x;
        const StrataParams& params = by_degree[static_cast<std::size_t>(d + bound * rank)];
        for (l.j = 0; l.j < parts; ++l.j) {
          ++scan.candidates;
          if (!is_valid_label(l, params)) continue;
          ++scan.valid;
          visit(l, params);
        }
        std::size_t i = 0;
        while (i < parts && l.degrees[i] == bound) l.degrees[i++] = -bound;
        if (i == parts) break;
        ++l.degrees[i];
      }
      return;
    }
    for (std::int64_t r = 1; r <= left; ++r) {
      l.ranks.push_back(r);
      ranks(left - r);
      l.ranks.pop_back();
    }
  };
  ranks(rank);
  return scan;
}

/// Random valid label for params, degrees of all but the last piece in [-spread, spread].
inline StratumLabel random_label(std::mt19937_64& rng, const StrataParams& base, std::int64_t spread) {
  const std::int64_t Nh = base.rank();
  while (true) {
    StratumLabel l;
    std::int64_t left = Nh;
    while (left > 0) {
      const std::int64_t take = std::uniform_int_distribution<std::int64_t>(1, left)(rng);
      l.ranks.push_back(take);
      left -= take;
    }
    std::int64_t sum = 0;
    for (std::size_t i = 0; i + 1 < l.ranks.size(); ++i) {
      l.degrees.push_back(std::uniform_int_distribution<std::int64_t>(-spread, spread)(rng));
      sum += l.degrees.back();
    }
    l.degrees.push_back(base.d - sum);
    l.j = rng() % l.ranks.size();
    if (is_valid_label(l, base)) return l;
  }
}

}  // namespace theta::testing
