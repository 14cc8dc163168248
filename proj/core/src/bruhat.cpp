#include "wreath/bruhat.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace wreath {

BruhatPoset::BruhatPoset(std::size_t degree) : degree_(degree) {
  const std::vector<Permutation> perms = all_permutations(degree);
  const std::size_t count = perms.size();
  words_per_row_ = (count + 63) / 64;
  lengths_.resize(count);
  lower_covers_.resize(count);
  for (std::size_t r = 0; r < count; ++r) lengths_[r] = wreath::length(perms[r]);

  for (std::size_t r = 0; r < count; ++r) {
    std::vector<int> images = perms[r].one_line();
    for (std::size_t i = 0; i < degree; ++i) {
      for (std::size_t j = i + 1; j < degree; ++j) {
        if (images[i] < images[j]) continue;
        std::swap(images[i], images[j]);
        const Permutation lower = Permutation::from_one_line(images);
        std::swap(images[i], images[j]);
        if (lengths_[r] == wreath::length(lower) + 1) lower_covers_[r].push_back(lex_rank(lower));
      }
    }
    std::sort(lower_covers_[r].begin(), lower_covers_[r].end());
  }

  std::vector<std::size_t> by_length(count);
  std::iota(by_length.begin(), by_length.end(), std::size_t{0});
  std::stable_sort(by_length.begin(), by_length.end(),
                   [&](std::size_t a, std::size_t b) { return lengths_[a] < lengths_[b]; });
  down_bits_.assign(count * words_per_row_, 0);
  for (std::size_t r : by_length) {
    std::uint64_t* row = &down_bits_[r * words_per_row_];
    row[r / 64] |= std::uint64_t{1} << (r % 64);
    for (std::uint64_t lower : lower_covers_[r]) {
      const std::uint64_t* src = &down_bits_[lower * words_per_row_];
      for (std::size_t w = 0; w < words_per_row_; ++w) row[w] |= src[w];
    }
  }
}

bool BruhatPoset::leq(std::uint64_t lower, std::uint64_t upper) const {
  return (down_bits_[upper * words_per_row_ + lower / 64] >> (lower % 64)) & 1U;
}

std::vector<std::uint64_t> BruhatPoset::down_set(std::uint64_t rank) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < size(); ++r)
    if (leq(r, rank)) out.push_back(r);
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> BruhatPoset::covers() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t r = 0; r < size(); ++r)
    for (std::uint64_t lower : lower_covers_[r]) out.emplace_back(lower, r);
  std::sort(out.begin(), out.end());
  return out;
}

const BruhatPoset& bruhat_poset(std::size_t degree) {
  if (degree > BruhatPoset::kMaxDegree)
    throw std::out_of_range("Bruhat order cache supports degree <= 7");
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<BruhatPoset>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[degree];
  if (!slot) slot = std::make_unique<BruhatPoset>(degree);
  return *slot;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.degree() != w.degree()) throw std::invalid_argument("bruhat_leq: degree mismatch");
  return bruhat_poset(u.degree()).leq(lex_rank(u), lex_rank(w));
}

}  // namespace wreath
