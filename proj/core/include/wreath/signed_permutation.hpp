#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wreath/wreath_element.hpp"

namespace wreath {

/// Signed permutation of {+-1, ..., +-n}: the Weyl group W(B_n).
///
/// Stored as the window (w(1), ..., w(n)); w(-i) = -w(i). Generators:
/// s^B_0 negates the first entry, s^B_i (1 <= i < n) swaps entries i, i+1.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::size_t n);
  /// Throws std::invalid_argument unless |window| is a permutation of 1..n.
  static SignedPermutation from_window(std::vector<int> window);
  static SignedPermutation generator(std::size_t n, std::size_t i);
  /// Product s^B_{i_1} ... s^B_{i_k}; throws std::out_of_range on a bad index.
  static SignedPermutation from_word(std::size_t n, std::span<const std::size_t> word);

  std::size_t rank() const { return window_.size(); }
  /// Signed image of the signed point i (i != 0).
  int operator()(int i) const { return i > 0 ? window_[i - 1] : -window_[-i - 1]; }
  const std::vector<int>& window() const { return window_; }
  std::size_t negative_count() const;
  std::string to_string() const;

  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> window_;
};

SignedPermutation compose(const SignedPermutation& p, const SignedPermutation& q);
inline SignedPermutation operator*(const SignedPermutation& p, const SignedPermutation& q) {
  return compose(p, q);
}
SignedPermutation inverse(const SignedPermutation& p);

/// Type-B length: inv(w(1..n)) - sum of the negative window entries.
std::size_t length_b(const SignedPermutation& w);

/// All 2^n n! signed permutations in a fixed order.
std::vector<SignedPermutation> all_signed_permutations(std::size_t n);

/// Bruhat order of W(B_n) on elements given by words over s^B_0..s^B_{n-1};
/// computed on the cover graph of reflection multiplication. n <= 5.
/// Throws std::out_of_range on an invalid generator index.
bool coxeterB_leq(std::span<const std::size_t> u_word, std::span<const std::size_t> w_word, std::size_t n);
bool coxeterB_leq(const SignedPermutation& u, const SignedPermutation& w);

/// The isomorphism S_2 wr S_d -> W(B_d), s_1^(1) -> s^B_0, t_i -> s^B_i.
/// Throws std::invalid_argument unless m == 2.
SignedPermutation to_signed(const WreathElement& x);

/// Number of conjugacy classes of W(B_n), by brute-force conjugation.
std::size_t class_count_B(std::size_t n);
/// Number of conjugacy classes of W(D_n) (even number of sign changes), by
/// brute-force conjugation inside W(D_n).
std::size_t class_count_D(std::size_t n);

}  // namespace wreath
