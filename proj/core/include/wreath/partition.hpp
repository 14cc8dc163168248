#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wreath {

/// Integer partition: a weakly decreasing list of positive parts.
///
/// The default ordering is lexicographic on the part lists; the canonical
/// listing order used throughout the library is the reverse of it (so (2)
/// is listed before (1,1)), see canonical_before().
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// "2,1,1" (empty string for the empty partition); also accepts "()" style
  /// wrappers and the literal "0" / "-" for the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// "2,1,1"; "-" for the empty partition.
  std::string to_string() const;

  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Canonical order: lexicographically descending part lists.
inline bool canonical_before(const Partition& a, const Partition& b) { return b < a; }

/// All partitions of n, each once, in canonical (lexicographically descending) order.
std::vector<Partition> partitions_of(int n);
std::uint64_t partition_count(int n);

Partition conjugate(const Partition& lambda);

/// Number of standard Young tableaux of shape lambda (hook-length formula).
std::uint64_t hook_dim(const Partition& lambda);

/// n(lambda) = sum_i (i-1) lambda_i.
int n_stat(const Partition& lambda);

/// Standard Young tableau stored as the (row, column) cell of each entry
/// 1..n (0-based cells, entry k at index k-1).
struct StandardTableau {
  std::vector<std::pair<int, int>> cells;
  /// Content (column - row) of entry k (1-based).
  int content(int k) const { return cells[k - 1].second - cells[k - 1].first; }
  friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;
};

/// All standard tableaux of the shape, in a fixed deterministic order.
std::vector<StandardTableau> standard_tableaux(const Partition& lambda);

}  // namespace wreath
