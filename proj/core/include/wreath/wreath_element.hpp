#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wreath/permutation.hpp"

namespace wreath {

/// Element ((w_1, ..., w_d), sigma) of the wreath product S_m wr S_d, i.e.
/// the product (w_i)_i * sigma of a base-group tuple and a top permutation.
struct WreathElement {
  std::vector<Permutation> factors;  // d permutations of degree m
  Permutation top;                   // degree d

  static WreathElement identity(std::size_t m, std::size_t d);

  std::size_t m() const { return factors.empty() ? 0 : factors.front().degree(); }
  std::size_t d() const { return top.degree(); }
  bool is_identity() const;
  /// True when every factor is the identity, i.e. the element lies in 1 x S_d.
  bool base_is_identity() const;

  friend auto operator<=>(const WreathElement&, const WreathElement&) = default;
  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/// Semidirect product: (a, sigma)(b, pi) = ((a_i b_{sigma^-1(i)})_i, sigma pi).
/// Throws ContextMismatch when the (m, d) ambients differ.
WreathElement multiply(const WreathElement& a, const WreathElement& b);
inline WreathElement operator*(const WreathElement& a, const WreathElement& b) { return multiply(a, b); }
WreathElement inverse(const WreathElement& a);

/// Block embedding into S_{md}: factor i permutes positions (i-1)m+1..im and
/// the top permutes the d blocks. Injective group homomorphism.
Permutation embed(const WreathElement& a);

enum class GeneratorKind { kS, kT };

/// s_i^(j) (kind kS, index i, block j) or t_k (kind kT, index k, block unused).
struct Generator {
  GeneratorKind kind = GeneratorKind::kS;
  std::size_t index = 1;
  std::size_t block = 1;

  std::string to_string() const;
  friend auto operator<=>(const Generator&, const Generator&) = default;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Throws std::out_of_range unless 1 <= i <= m-1 and 1 <= j <= d (kind s) or
/// 1 <= i <= d-1 (kind t).
WreathElement generator(std::size_t m, std::size_t d, const Generator& g);
WreathElement generator(std::size_t m, std::size_t d, GeneratorKind kind, std::size_t i, std::size_t j = 1);

/// Parses "s<i>^<j>", "t<k>" and "e" tokens separated by whitespace (or '*')
/// and multiplies them left to right. Throws std::invalid_argument on bad
/// syntax and std::out_of_range on indices outside the (m, d) ambient.
WreathElement parse_word(std::string_view text, std::size_t m, std::size_t d);
std::vector<Generator> parse_generators(std::string_view text, std::size_t m, std::size_t d);
WreathElement evaluate_word(std::size_t m, std::size_t d, const std::vector<Generator>& word);

/// Canonical word: reduced words of the factors (block 1 first) followed by
/// a reduced word of the top.
std::vector<Generator> canonical_word(const WreathElement& a);
/// canonical_word() rendered with single spaces; "e" for the identity.
std::string format_word(const WreathElement& a);

/// The Bruhat order of the wreath product: equal tops and factorwise
/// type-A comparison. Throws ContextMismatch when the ambients differ.
bool bruhat_leq(const WreathElement& x, const WreathElement& y);

/// Sum of the factor lengths; the dimension of the Bruhat cell of a.
std::size_t cell_dimension(const WreathElement& a);

}  // namespace wreath
