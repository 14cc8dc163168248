#include "wreath/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wreath {

Permutation::Permutation(std::size_t n) : images_(n) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_one_line(std::span<const int> images) {
  const std::size_t n = images.size();
  std::vector<bool> seen(n, false);
  Permutation p;
  p.images_.reserve(n);
  for (int v : images) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v - 1])
      throw std::invalid_argument("not a permutation in one-line notation");
    seen[v - 1] = true;
    p.images_.push_back(v - 1);
  }
  return p;
}

Permutation Permutation::from_one_line(std::initializer_list<int> images) {
  return from_one_line(std::span<const int>(images.begin(), images.size()));
}

Permutation Permutation::simple(std::size_t n, std::size_t i) {
  if (i < 1 || i >= n) throw std::out_of_range("simple transposition index out of range");
  return transposition(n, i, i + 1);
}

Permutation Permutation::transposition(std::size_t n, std::size_t a, std::size_t b) {
  if (a < 1 || b < 1 || a > n || b > n) throw std::out_of_range("transposition point out of range");
  Permutation p(n);
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(images_.size());
  std::transform(images_.begin(), images_.end(), out.begin(), [](int v) { return v + 1; });
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(images_[i] + 1);
  }
  return s + "]";
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = p(q(i)) + 1;
  return Permutation::from_one_line(images);
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[p(i)] = static_cast<int>(i) + 1;
  return Permutation::from_one_line(images);
}

std::size_t length(const Permutation& p) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < p.degree(); ++i)
    for (std::size_t j = i + 1; j < p.degree(); ++j)
      if (p(i) > p(j)) ++inversions;
  return inversions;
}

std::vector<std::size_t> reduced_word(const Permutation& p) {
  std::vector<int> images = p.one_line();
  std::vector<std::size_t> reversed;
  // Peel off the leftmost right descent until the identity remains.
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < images.size() && images[i] < images[i + 1]) ++i;
    if (i + 1 >= images.size()) break;
    std::swap(images[i], images[i + 1]);
    reversed.push_back(i + 1);
  }
  return {reversed.rbegin(), reversed.rend()};
}

Permutation from_word(std::size_t n, std::span<const std::size_t> word) {
  Permutation p(n);
  for (std::size_t i : word) p = p * Permutation::simple(n, i);
  return p;
}

std::uint64_t factorial(std::size_t n) {
  if (n > 20) throw std::overflow_error("factorial exceeds 64 bits");
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

std::uint64_t lex_rank(const Permutation& p) {
  const std::size_t n = p.degree();
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller_later = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (p(j) < p(i)) ++smaller_later;
    rank += smaller_later * factorial(n - 1 - i);
  }
  return rank;
}

Permutation lex_unrank(std::size_t n, std::uint64_t rank) {
  if (rank >= factorial(n)) throw std::out_of_range("lex_unrank: rank out of range");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t block = factorial(n - 1 - i);
    const auto k = static_cast<std::size_t>(rank / block);
    rank %= block;
    images.push_back(pool[k]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return Permutation::from_one_line(images);
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.push_back(Permutation::from_one_line(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace wreath
