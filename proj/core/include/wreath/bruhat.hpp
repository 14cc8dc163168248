#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "wreath/permutation.hpp"

namespace wreath {

/// Strong Bruhat order of the symmetric group of one degree, materialized
/// from its cover graph (u < u*(i j) whenever the length goes up by one).
///
/// Elements are indexed by lex_rank(). Instances are built once per degree
/// by bruhat_poset() and are immutable afterwards.
class BruhatPoset {
 public:
  /// Largest degree bruhat_poset() will materialize (n!^2 bits of down-sets).
  static constexpr std::size_t kMaxDegree = 7;

  explicit BruhatPoset(std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return lengths_.size(); }
  std::size_t length(std::uint64_t rank) const { return lengths_[rank]; }

  bool leq(std::uint64_t lower, std::uint64_t upper) const;
  /// Ranks u with u covered by the element of the given rank.
  const std::vector<std::uint64_t>& lower_covers(std::uint64_t rank) const { return lower_covers_[rank]; }
  /// All ranks u <= the element of the given rank, ascending.
  std::vector<std::uint64_t> down_set(std::uint64_t rank) const;
  /// Every cover pair (lower, upper), sorted.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> covers() const;

 private:
  std::size_t degree_;
  std::size_t words_per_row_;
  std::vector<std::size_t> lengths_;
  std::vector<std::vector<std::uint64_t>> lower_covers_;
  std::vector<std::uint64_t> down_bits_;
};

/// Shared, lazily built poset for the degree; thread-safe.
/// Throws std::out_of_range above BruhatPoset::kMaxDegree.
const BruhatPoset& bruhat_poset(std::size_t degree);

/// u <= w in the strong Bruhat order; throws std::invalid_argument on degree mismatch.
bool bruhat_leq(const Permutation& u, const Permutation& w);

}  // namespace wreath
