#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wreath {

/// A bijection of {1, ..., n}, stored 0-based internally.
///
/// Composition follows functions: (p * q)(i) = p(q(i)). The simple
/// transposition s_i swaps i and i+1; right multiplication by s_i swaps the
/// entries in positions i and i+1 of the one-line notation.
class Permutation {
 public:
  Permutation() = default;
  /// Identity of degree n.
  explicit Permutation(std::size_t n);

  /// From 1-based one-line notation; throws std::invalid_argument if the
  /// images do not form a permutation of 1..n.
  static Permutation from_one_line(std::span<const int> images);
  static Permutation from_one_line(std::initializer_list<int> images);
  /// Simple transposition s_i, 1 <= i < n.
  static Permutation simple(std::size_t n, std::size_t i);
  /// Transposition of the 1-based points a and b.
  static Permutation transposition(std::size_t n, std::size_t a, std::size_t b);

  std::size_t degree() const { return images_.size(); }
  /// 0-based image of the 0-based point i.
  int operator()(std::size_t i) const { return images_[i]; }
  /// 1-based one-line notation.
  std::vector<int> one_line() const;
  bool is_identity() const;

  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (p * q)(i) = p(q(i)); throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }
Permutation inverse(const Permutation& p);

/// Coxeter length: number of inversions i < j with p(i) > p(j).
std::size_t length(const Permutation& p);

/// Reduced word (1-based simple indices) i_1 ... i_k with p = s_{i_1} ... s_{i_k}.
std::vector<std::size_t> reduced_word(const Permutation& p);
Permutation from_word(std::size_t n, std::span<const std::size_t> word);

std::uint64_t factorial(std::size_t n);
/// Rank of p among all permutations of its degree in lexicographic order of
/// one-line notation.
std::uint64_t lex_rank(const Permutation& p);
Permutation lex_unrank(std::size_t n, std::uint64_t rank);
/// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace wreath
