#pragma once

// Splitting types of rank-N bundles restricted to a chain of l rational
// curves: an N x l matrix whose row j lists the degrees of the j-th line
// bundle summand on each component.

#include <cstdint>
#include <string>
#include <vector>

#include "theta/numeric.hpp"

namespace theta {

enum class ChainKind { kUnspecified, kBridge, kTail };

std::string to_string(ChainKind kind);

struct SplittingType {
  std::int64_t rank = 0;    // N
  std::int64_t length = 0;  // l
  std::vector<std::vector<std::int64_t>> rows;
  ChainKind kind = ChainKind::kUnspecified;

  SplittingType() = default;
  SplittingType(std::int64_t rank_, std::int64_t length_, std::vector<std::vector<std::int64_t>> rows_,
                ChainKind kind_ = ChainKind::kUnspecified);

  friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

/// Every entry is nonnegative.
bool is_counit_positive(const SplittingType& t);
/// Every column has a positive entry.
bool is_strictly_positive(const SplittingType& t);
/// Every row is zero or a standard basis vector.
bool is_pure(const SplittingType& t);
bool is_admissible(const SplittingType& t);

/// All admissible row assignments from {0, e_1, ..., e_l}^N, in lexicographic order.
std::vector<SplittingType> enum_admissible(std::int64_t rank, std::int64_t length);

/// Admissible types up to reordering the summands: rows sorted, deduplicated.
std::vector<SplittingType> canonical_admissible(std::int64_t rank, std::int64_t length);

/// Rows sorted lexicographically.
SplittingType canonical_form(const SplittingType& t);

/// sum_{j=0}^{l} (-1)^j C(l, j) (l + 1 - j)^N
Integer inclusion_exclusion_count(std::int64_t rank, std::int64_t length);

/// Number of summands of degree 1 on component i (0-based), i.e. k in
/// O(1)^k + O^{N-k}. Throws DomainError for inadmissible types.
std::int64_t per_component_form(const SplittingType& t, std::int64_t i);

std::int64_t chain_degree(const SplittingType& t);

}  // namespace theta
