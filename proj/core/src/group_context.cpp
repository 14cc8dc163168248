#include "wreath/group_context.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "wreath/bruhat.hpp"

namespace wreath {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f = saturating_mul(f, k);
  return f;
}

}  // namespace

WreathShape::WreathShape(std::size_t m, std::size_t d) : WreathShape(m, d, {d}) {}

WreathShape::WreathShape(std::size_t m, std::size_t d, std::vector<std::size_t> young)
    : m_(m), d_(d), young_(std::move(young)) {
  if (m == 0 || d == 0) throw std::invalid_argument("wreath product needs m >= 1 and d >= 1");
  for (std::size_t b = 0; b < young_.size(); ++b) {
    if (young_[b] == 0) throw std::invalid_argument("Young composition parts must be positive");
    block_of_.insert(block_of_.end(), young_[b], b);
  }
  if (block_of_.size() != d) throw std::invalid_argument("Young composition must sum to d");

  for (std::size_t j = 1; j <= d; ++j)
    for (std::size_t i = 1; i < m; ++i) generators_.push_back(Generator{GeneratorKind::kS, i, j});
  for (std::size_t k = 1; k < d; ++k)
    if (block_of_[k - 1] == block_of_[k]) generators_.push_back(Generator{GeneratorKind::kT, k, 1});
}

bool WreathShape::top_allowed(const Permutation& top) const {
  if (top.degree() != d_) return false;
  for (std::size_t i = 0; i < d_; ++i)
    if (block_of_[static_cast<std::size_t>(top(i))] != block_of_[i]) return false;
  return true;
}

bool WreathShape::contains(const WreathElement& x) const {
  return x.m() == m_ && x.d() == d_ && top_allowed(x.top);
}

bool WreathShape::contains(const WreathShape& sub) const {
  if (sub.m_ != m_ || sub.d_ != d_) return false;
  for (std::size_t k = 0; k + 1 < d_; ++k)
    if (sub.block_of_[k] == sub.block_of_[k + 1] && block_of_[k] != block_of_[k + 1]) return false;
  return true;
}

std::uint64_t WreathShape::order() const {
  std::uint64_t total = 1;
  const std::uint64_t factor_order = saturating_factorial(m_);
  for (std::size_t j = 0; j < d_; ++j) total = saturating_mul(total, factor_order);
  for (std::size_t part : young_) total = saturating_mul(total, saturating_factorial(part));
  return total;
}

std::vector<Generator> WreathShape::word(const WreathElement& x) const {
  if (!contains(x)) throw std::invalid_argument("word: element not in the subgroup");
  return canonical_word(x);
}

void require_within_bound(const WreathShape& shape, std::size_t bound) {
  const std::uint64_t order = shape.order();
  if (order > bound)
    throw BoundExceeded("group of order " +
                        (order == std::numeric_limits<std::uint64_t>::max() ? std::string(">2^64")
                                                                             : std::to_string(order)) +
                        " exceeds the enumeration bound " + std::to_string(bound));
}

GroupContext::GroupContext(std::size_t m, std::size_t d, std::size_t bound)
    : GroupContext(WreathShape(m, d), bound) {}

GroupContext::GroupContext(WreathShape shape, std::size_t bound) : shape_(std::move(shape)) {
  require_within_bound(shape_, bound);
  const std::size_t m = shape_.m();
  const std::size_t d = shape_.d();
  const std::vector<Permutation> factor_perms = all_permutations(m);
  const std::size_t base_count = static_cast<std::size_t>(shape_.order() / [&] {
    std::uint64_t t = 1;
    for (std::size_t part : shape_.young()) t *= factorial(part);
    return t;
  }());
  elements_.reserve(static_cast<std::size_t>(shape_.order()));
  for (const Permutation& top : all_permutations(d)) {
    if (!shape_.top_allowed(top)) continue;
    for (std::size_t code = 0; code < base_count; ++code) {
      WreathElement x;
      x.factors.resize(d);
      std::size_t rest = code;
      for (std::size_t j = d; j-- > 0;) {
        x.factors[j] = factor_perms[rest % factor_perms.size()];
        rest /= factor_perms.size();
      }
      x.top = top;
      index_.emplace(key(x), elements_.size());
      elements_.push_back(std::move(x));
    }
  }
}

std::uint64_t GroupContext::key(const WreathElement& x) const {
  const std::uint64_t radix = factorial(shape_.m());
  std::uint64_t k = lex_rank(x.top);
  for (const auto& f : x.factors) k = k * radix + lex_rank(f);
  return k;
}

std::optional<std::size_t> GroupContext::find(const WreathElement& x) const {
  if (!shape_.contains(x)) return std::nullopt;
  const auto it = index_.find(key(x));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GroupContext::index_of(const WreathElement& x) const {
  if (auto i = find(x)) return *i;
  throw std::out_of_range("element " + format_word(x) + " is not in the group");
}

std::size_t GroupContext::multiply(std::size_t a, std::size_t b) const {
  return index_of(elements_[a] * elements_[b]);
}

std::size_t GroupContext::inverse(std::size_t a) const { return index_of(wreath::inverse(elements_[a])); }

void GroupContext::build_classes() const {
  const std::size_t n = elements_.size();
  std::vector<WreathElement> gens;
  for (const auto& g : shape_.generators()) gens.push_back(generator(m(), d(), g));
  class_of_.assign(n, std::numeric_limits<std::size_t>::max());
  for (std::size_t start = 0; start < n; ++start) {
    if (class_of_[start] != std::numeric_limits<std::size_t>::max()) continue;
    const std::size_t id = classes_.size();
    std::vector<std::size_t> members{start};
    class_of_[start] = id;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      for (const auto& g : gens) {  // generators are involutions: g x g^-1 = g x g
        const std::size_t next = index_of(g * elements_[cur] * g);
        if (class_of_[next] == std::numeric_limits<std::size_t>::max()) {
          class_of_[next] = id;
          members.push_back(next);
          queue.push_back(next);
        }
      }
    }
    std::sort(members.begin(), members.end());
    classes_.push_back(std::move(members));
  }
}

const std::vector<std::vector<std::size_t>>& GroupContext::conjugacy_classes() const {
  std::call_once(classes_once_, [this] { build_classes(); });
  return classes_;
}

std::size_t GroupContext::class_of(std::size_t element) const {
  conjugacy_classes();
  return class_of_[element];
}

std::vector<std::size_t> GroupContext::class_representatives() const {
  std::vector<std::size_t> reps;
  for (const auto& c : conjugacy_classes()) reps.push_back(c.front());
  return reps;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_covers(const GroupContext& ctx) {
  const BruhatPoset& poset = bruhat_poset(ctx.m());
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t y = 0; y < ctx.size(); ++y) {
    const WreathElement& upper = ctx.element(y);
    for (std::size_t i = 0; i < ctx.d(); ++i) {
      for (std::uint64_t lower_rank : poset.lower_covers(lex_rank(upper.factors[i]))) {
        WreathElement lower = upper;
        lower.factors[i] = lex_unrank(ctx.m(), lower_rank);
        covers.emplace_back(ctx.index_of(lower), y);
      }
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

CellStatistics cell_statistics(const GroupContext& ctx) {
  CellStatistics stats;
  for (const auto& x : ctx.elements()) {
    ++stats.cell_count;
    ++stats.by_dimension[cell_dimension(x)];
  }
  return stats;
}

}  // namespace wreath
