#include "wreath/signed_permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wreath {

SignedPermutation::SignedPermutation(std::size_t n) : window_(n) {
  std::iota(window_.begin(), window_.end(), 1);
}

SignedPermutation SignedPermutation::from_window(std::vector<int> window) {
  std::vector<bool> seen(window.size(), false);
  for (int v : window) {
    const auto a = static_cast<std::size_t>(std::abs(v));
    if (a < 1 || a > window.size() || seen[a - 1])
      throw std::invalid_argument("not a signed permutation window");
    seen[a - 1] = true;
  }
  SignedPermutation p;
  p.window_ = std::move(window);
  return p;
}

SignedPermutation SignedPermutation::generator(std::size_t n, std::size_t i) {
  if (i >= n) throw std::out_of_range("type-B generator index out of range");
  SignedPermutation p(n);
  if (i == 0)
    p.window_[0] = -p.window_[0];
  else
    std::swap(p.window_[i - 1], p.window_[i]);
  return p;
}

SignedPermutation SignedPermutation::from_word(std::size_t n, std::span<const std::size_t> word) {
  SignedPermutation p(n);
  for (std::size_t i : word) p = p * generator(n, i);
  return p;
}

std::size_t SignedPermutation::negative_count() const {
  return static_cast<std::size_t>(std::count_if(window_.begin(), window_.end(), [](int v) { return v < 0; }));
}

std::string SignedPermutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(window_[i]);
  }
  return s + "]";
}

SignedPermutation compose(const SignedPermutation& p, const SignedPermutation& q) {
  if (p.rank() != q.rank()) throw std::invalid_argument("compose: rank mismatch");
  std::vector<int> window(p.rank());
  for (std::size_t i = 0; i < window.size(); ++i) window[i] = p(q(static_cast<int>(i) + 1));
  return SignedPermutation::from_window(std::move(window));
}

SignedPermutation inverse(const SignedPermutation& p) {
  std::vector<int> window(p.rank());
  for (std::size_t i = 0; i < window.size(); ++i) {
    const int v = p.window()[i];
    const int point = static_cast<int>(i) + 1;
    window[static_cast<std::size_t>(std::abs(v)) - 1] = v > 0 ? point : -point;
  }
  return SignedPermutation::from_window(std::move(window));
}

std::size_t length_b(const SignedPermutation& w) {
  const auto& win = w.window();
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < win.size(); ++i)
    for (std::size_t j = i + 1; j < win.size(); ++j)
      if (win[i] > win[j]) ++inversions;
  std::size_t negative_sum = 0;
  for (int v : win)
    if (v < 0) negative_sum += static_cast<std::size_t>(-v);
  return inversions + negative_sum;
}

std::vector<SignedPermutation> all_signed_permutations(std::size_t n) {
  std::vector<SignedPermutation> out;
  for (const Permutation& p : all_permutations(n)) {
    const std::vector<int> base = p.one_line();
    for (std::size_t signs = 0; signs < (std::size_t{1} << n); ++signs) {
      std::vector<int> window = base;
      for (std::size_t i = 0; i < n; ++i)
        if ((signs >> i) & 1U) window[i] = -window[i];
      out.push_back(SignedPermutation::from_window(std::move(window)));
    }
  }
  return out;
}

namespace {

class BruhatPosetB {
 public:
  explicit BruhatPosetB(std::size_t n) : elements_(all_signed_permutations(n)) {
    const std::size_t count = elements_.size();
    for (std::size_t i = 0; i < count; ++i) index_.emplace(elements_[i], i);
    std::set<SignedPermutation> reflections;
    for (std::size_t g = 0; g < n; ++g) {
      const SignedPermutation s = SignedPermutation::generator(n, g);
      for (const auto& x : elements_) reflections.insert(x * s * inverse(x));
    }
    std::vector<std::size_t> lengths(count);
    for (std::size_t i = 0; i < count; ++i) lengths[i] = length_b(elements_[i]);
    words_ = (count + 63) / 64;
    bits_.assign(count * words_, 0);
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lengths[a] < lengths[b]; });
    for (std::size_t v : order) {
      std::uint64_t* row = &bits_[v * words_];
      row[v / 64] |= std::uint64_t{1} << (v % 64);
      for (const auto& r : reflections) {
        const std::size_t u = index_.at(elements_[v] * r);
        if (lengths[u] + 1 != lengths[v]) continue;
        const std::uint64_t* src = &bits_[u * words_];
        for (std::size_t w = 0; w < words_; ++w) row[w] |= src[w];
      }
    }
  }

  bool leq(const SignedPermutation& u, const SignedPermutation& w) const {
    const std::size_t a = index_.at(u);
    const std::size_t b = index_.at(w);
    return (bits_[b * words_ + a / 64] >> (a % 64)) & 1U;
  }

 private:
  std::vector<SignedPermutation> elements_;
  std::map<SignedPermutation, std::size_t> index_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

const BruhatPosetB& poset_b(std::size_t n) {
  if (n > 5) throw std::out_of_range("type-B Bruhat order supports rank <= 5");
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<BruhatPosetB>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<BruhatPosetB>(n);
  return *slot;
}

std::size_t count_classes(const std::vector<SignedPermutation>& group) {
  std::set<SignedPermutation> seen;
  std::size_t classes = 0;
  for (const auto& x : group) {
    if (seen.count(x)) continue;
    ++classes;
    for (const auto& g : group) seen.insert(g * x * inverse(g));
  }
  return classes;
}

}  // namespace

bool coxeterB_leq(const SignedPermutation& u, const SignedPermutation& w) {
  if (u.rank() != w.rank()) throw std::invalid_argument("coxeterB_leq: rank mismatch");
  return poset_b(u.rank()).leq(u, w);
}

bool coxeterB_leq(std::span<const std::size_t> u_word, std::span<const std::size_t> w_word, std::size_t n) {
  return coxeterB_leq(SignedPermutation::from_word(n, u_word), SignedPermutation::from_word(n, w_word));
}

SignedPermutation to_signed(const WreathElement& x) {
  if (x.m() != 2) throw std::invalid_argument("to_signed requires m = 2");
  const Permutation p = embed(x);
  std::vector<int> window(x.d());
  for (std::size_t j = 0; j < x.d(); ++j) {
    const int image = p(2 * j);  // 0-based image of the first slot of block j
    const int block = image / 2 + 1;
    window[j] = (image % 2 == 0) ? block : -block;
  }
  return SignedPermutation::from_window(std::move(window));
}

std::size_t class_count_B(std::size_t n) { return count_classes(all_signed_permutations(n)); }

std::size_t class_count_D(std::size_t n) {
  std::vector<SignedPermutation> group;
  for (auto& x : all_signed_permutations(n))
    if (x.negative_count() % 2 == 0) group.push_back(std::move(x));
  return count_classes(group);
}

}  // namespace wreath
