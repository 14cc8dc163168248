#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wreath/errors.hpp"
#include "wreath/wreath_element.hpp"

namespace wreath {

/// The subgroup S_m wr S_Y of S_m wr S_d whose tops lie in the Young subgroup
/// S_Y = S_{y_1} x ... x S_{y_r} of contiguous blocks. The full wreath
/// product is Y = (d); S_m^d is Y = (1, ..., 1); a plain S_n is (n, 1, (1)).
class WreathShape {
 public:
  /// Full group S_m wr S_d.
  WreathShape(std::size_t m, std::size_t d);
  /// Throws std::invalid_argument unless young is a composition of d.
  WreathShape(std::size_t m, std::size_t d, std::vector<std::size_t> young);

  std::size_t m() const { return m_; }
  std::size_t d() const { return d_; }
  const std::vector<std::size_t>& young() const { return young_; }
  bool is_full() const { return young_.size() == 1; }

  /// s_i^(j) for j = 1..d, i = 1..m-1, then t_k for every k inside a Young block.
  const std::vector<Generator>& generators() const { return generators_; }
  bool top_allowed(const Permutation& top) const;
  bool contains(const WreathElement& x) const;
  /// True when every element of `sub` lies in this shape.
  bool contains(const WreathShape& sub) const;
  /// Group order, saturating at UINT64_MAX.
  std::uint64_t order() const;

  /// Word in generators() representing x (canonical_word); x must be contained.
  std::vector<Generator> word(const WreathElement& x) const;

  friend bool operator==(const WreathShape& a, const WreathShape& b) {
    return a.m_ == b.m_ && a.d_ == b.d_ && a.young_ == b.young_;
  }

 private:
  std::size_t m_;
  std::size_t d_;
  std::vector<std::size_t> young_;
  std::vector<std::size_t> block_of_;
  std::vector<Generator> generators_;
};

/// Enumerated group with cached element list and conjugacy classes.
///
/// Elements are listed with the top (lex order) as the major key and the
/// factor tuple (lex order per factor) as the minor key. The element list
/// is built in the constructor; conjugacy classes on first request.
class GroupContext {
 public:
  /// Throws BoundExceeded when the group order exceeds `bound`.
  explicit GroupContext(WreathShape shape, std::size_t bound = enumeration_bound());
  GroupContext(std::size_t m, std::size_t d, std::size_t bound = enumeration_bound());

  const WreathShape& shape() const { return shape_; }
  std::size_t m() const { return shape_.m(); }
  std::size_t d() const { return shape_.d(); }
  std::size_t size() const { return elements_.size(); }
  const std::vector<WreathElement>& elements() const { return elements_; }
  const WreathElement& element(std::size_t i) const { return elements_[i]; }

  /// Index of x in elements(); throws std::out_of_range when x is not a member.
  std::size_t index_of(const WreathElement& x) const;
  std::optional<std::size_t> find(const WreathElement& x) const;
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;

  /// Conjugacy classes by brute-force conjugation; each class is a sorted list
  /// of element indices, classes ordered by their smallest member.
  const std::vector<std::vector<std::size_t>>& conjugacy_classes() const;
  std::size_t class_of(std::size_t element) const;
  /// Smallest-index member of each class.
  std::vector<std::size_t> class_representatives() const;

 private:
  std::uint64_t key(const WreathElement& x) const;
  void build_classes() const;

  WreathShape shape_;
  std::vector<WreathElement> elements_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  mutable std::once_flag classes_once_;
  mutable std::vector<std::vector<std::size_t>> classes_;
  mutable std::vector<std::size_t> class_of_;
};

/// Throws BoundExceeded unless the order of the shape is at most `bound`.
void require_within_bound(const WreathShape& shape, std::size_t bound);

/// All cover pairs x < y (indices into ctx.elements()) of the wreath Bruhat
/// order, sorted. Covers change exactly one factor by a type-A cover.
std::vector<std::pair<std::size_t, std::size_t>> hasse_covers(const GroupContext& ctx);

struct CellStatistics {
  std::size_t cell_count = 0;
  /// cell dimension -> number of cells of that dimension.
  std::map<std::size_t, std::size_t> by_dimension;
};

/// One Bruhat cell per element; the cell of (w_i)_i sigma has dimension sum_i l(w_i).
CellStatistics cell_statistics(const GroupContext& ctx);

}  // namespace wreath
