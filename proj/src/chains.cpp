#include "theta/chains.hpp"

#include <algorithm>

namespace theta {

std::string to_string(ChainKind kind) {
  switch (kind) {
    case ChainKind::kUnspecified: return "chain";
    case ChainKind::kBridge: return "bridge";
    case ChainKind::kTail: return "tail";
  }
  return "chain";
}

SplittingType::SplittingType(std::int64_t rank_, std::int64_t length_,
                             std::vector<std::vector<std::int64_t>> rows_, ChainKind kind_)
    : rank(rank_), length(length_), rows(std::move(rows_)), kind(kind_) {
  if (rank < 1 || length < 1) throw DomainError("rank and length must be positive");
  if (rows.size() != static_cast<std::size_t>(rank)) throw DomainError("splitting type needs one row per summand");
  for (const auto& row : rows) {
    if (row.size() != static_cast<std::size_t>(length)) throw DomainError("splitting type row has the wrong length");
  }
}

bool is_counit_positive(const SplittingType& t) {
  for (const auto& row : t.rows) {
    if (std::any_of(row.begin(), row.end(), [](std::int64_t m) { return m < 0; })) return false;
  }
  return true;
}

bool is_strictly_positive(const SplittingType& t) {
  for (std::int64_t i = 0; i < t.length; ++i) {
    const bool hit = std::any_of(t.rows.begin(), t.rows.end(),
                                 [&](const auto& row) { return row[static_cast<std::size_t>(i)] > 0; });
    if (!hit) return false;
  }
  return true;
}

bool is_pure(const SplittingType& t) {
  for (const auto& row : t.rows) {
    std::int64_t ones = 0;
    for (const auto m : row) {
      if (m == 1) ++ones;
      else if (m != 0) return false;
    }
    if (ones > 1) return false;
  }
  return true;
}

bool is_admissible(const SplittingType& t) {
  return is_counit_positive(t) && is_strictly_positive(t) && is_pure(t);
}

std::vector<SplittingType> enum_admissible(std::int64_t rank, std::int64_t length) {
  if (rank < 1 || length < 1) throw DomainError("rank and length must be positive");
  if (rank > 12) throw DomainError("rank above 12 is too large to enumerate");
  std::vector<SplittingType> out;
  if (length > rank) return out;
  // choice[r] in 0..l: 0 is the zero row, c > 0 is e_c.
  std::vector<std::int64_t> choice(static_cast<std::size_t>(rank), 0);
  while (true) {
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto c : choice) {
      std::vector<std::int64_t> row(static_cast<std::size_t>(length), 0);
      if (c > 0) row[static_cast<std::size_t>(c - 1)] = 1;
      rows.push_back(std::move(row));
    }
    SplittingType t(rank, length, std::move(rows));
    if (is_admissible(t)) out.push_back(std::move(t));
    std::size_t i = choice.size();
    while (i > 0 && choice[i - 1] == length) choice[--i] = 0;
    if (i == 0) break;
    ++choice[i - 1];
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.rows < b.rows; });
  return out;
}

SplittingType canonical_form(const SplittingType& t) {
  SplittingType out = t;
  std::sort(out.rows.begin(), out.rows.end());
  return out;
}

std::vector<SplittingType> canonical_admissible(std::int64_t rank, std::int64_t length) {
  std::vector<SplittingType> out;
  for (const auto& t : enum_admissible(rank, length)) out.push_back(canonical_form(t));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.rows < b.rows; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Integer inclusion_exclusion_count(std::int64_t rank, std::int64_t length) {
  if (rank < 0 || length < 0) throw DomainError("rank and length must be nonnegative");
  Integer total = 0;
  Integer binom = 1;
  for (std::int64_t j = 0; j <= length; ++j) {
    const Integer term = binom * pow(Integer(length + 1 - j), static_cast<unsigned>(rank));
    total += (j % 2 == 0) ? term : Integer(-term);
    binom = binom * (length - j) / (j + 1);
  }
  return total;
}

std::int64_t per_component_form(const SplittingType& t, std::int64_t i) {
  if (!is_admissible(t)) throw DomainError("per_component_form needs an admissible splitting type");
  if (i < 0 || i >= t.length) throw DomainError("component index out of range");
  std::int64_t k = 0;
  for (const auto& row : t.rows) k += row[static_cast<std::size_t>(i)] == 1;
  if (k <= 0 || k > t.rank) throw DomainError("per-component form is not O(1)^k + O^(N-k) with 0 < k <= N");
  return k;
}

std::int64_t chain_degree(const SplittingType& t) {
  std::int64_t sum = 0;
  for (const auto& row : t.rows) {
    for (const auto m : row) sum += m;
  }
  return sum;
}

}  // namespace theta
