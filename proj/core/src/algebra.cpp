#include "wreath/algebra.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <future>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "wreath/bruhat.hpp"
#include "wreath/matrix.hpp"

namespace wreath {

Rational AlgebraVector::coefficient(const BasisIndex& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraVector::add(const BasisIndex& b, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraVector& AlgebraVector::operator+=(const AlgebraVector& other) {
  for (const auto& [b, c] : other.terms_) add(b, c);
  return *this;
}

AlgebraVector& AlgebraVector::operator-=(const AlgebraVector& other) {
  for (const auto& [b, c] : other.terms_) add(b, -c);
  return *this;
}

AlgebraVector operator*(const Rational& s, const AlgebraVector& a) {
  AlgebraVector out;
  if (s.is_zero()) return out;
  for (const auto& [b, c] : a.terms_) out.terms_.emplace(b, s * c);
  return out;
}

ProductResult ProductResult::defined(AlgebraVector value) {
  ProductResult r;
  r.value_ = std::move(value);
  return r;
}

ProductResult ProductResult::undefined(std::vector<std::pair<BasisIndex, BasisIndex>> pairs) {
  if (pairs.empty()) throw std::invalid_argument("undefined product needs an offending pair");
  ProductResult r;
  r.defined_ = false;
  r.pairs_ = std::move(pairs);
  return r;
}

const AlgebraVector& ProductResult::value() const {
  if (!defined_) throw std::logic_error("product is not computable from the transversal cases");
  return value_;
}

ConvolutionAlgebra::ConvolutionAlgebra(std::size_t m, std::size_t d, std::size_t bound)
    : ConvolutionAlgebra(std::make_shared<const GroupContext>(m, d, bound)) {}

ConvolutionAlgebra::ConvolutionAlgebra(std::shared_ptr<const GroupContext> ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("ConvolutionAlgebra: null group context");
  if (!ctx_->shape().is_full()) throw std::invalid_argument("ConvolutionAlgebra needs the full wreath product");
  taus_ = all_permutations(ctx_->d());
  const std::size_t n = taus_.size();
  tau_mul_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) tau_mul_[a * n + b] = static_cast<std::size_t>(lex_rank(taus_[a] * taus_[b]));
  top_rank_.reserve(ctx_->size());
  base_identity_.reserve(ctx_->size());
  for (const WreathElement& x : ctx_->elements()) {
    top_rank_.push_back(static_cast<std::size_t>(lex_rank(x.top)));
    base_identity_.push_back(x.base_is_identity());
  }
}

std::size_t ConvolutionAlgebra::tau_rank(const Permutation& tau) const {
  if (tau.degree() != d()) throw ContextMismatch("tau has the wrong degree");
  return static_cast<std::size_t>(lex_rank(tau));
}

BasisIndex ConvolutionAlgebra::basis(const WreathElement& w, const Permutation& tau) const {
  if (w.m() != m() || w.d() != d()) throw ContextMismatch("element from a different wreath product");
  return BasisIndex{ctx_->index_of(w), tau_rank(tau)};
}

std::string ConvolutionAlgebra::describe(const BasisIndex& b) const {
  return "[Y_{" + format_word(ctx_->element(b.element)) + "," + taus_.at(b.tau).to_string() + "}]";
}

void ConvolutionAlgebra::build_down_sets() const {
  const BruhatPoset& poset = bruhat_poset(m());
  down_sets_.resize(ctx_->size());
  for (std::size_t idx = 0; idx < ctx_->size(); ++idx) {
    const WreathElement& w = ctx_->element(idx);
    std::vector<std::vector<std::uint64_t>> per_factor;
    for (const Permutation& f : w.factors) per_factor.push_back(poset.down_set(lex_rank(f)));
    WreathElement u = w;
    std::vector<std::size_t>& out = down_sets_[idx];
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
      if (j == d()) {
        out.push_back(ctx_->index_of(u));
        return;
      }
      for (std::uint64_t r : per_factor[j]) {
        u.factors[j] = lex_unrank(m(), r);
        rec(j + 1);
      }
    };
    rec(0);
    std::sort(out.begin(), out.end());
  }
}

const std::vector<std::size_t>& ConvolutionAlgebra::down_set(std::size_t element) const {
  std::call_once(down_once_, [this] { build_down_sets(); });
  return down_sets_.at(element);
}

AlgebraVector ConvolutionAlgebra::y_bar(std::size_t element, std::size_t tau) const {
  AlgebraVector out;
  for (std::size_t u : down_set(element)) out.add(BasisIndex{u, tau}, Rational(1));
  return out;
}

AlgebraVector ConvolutionAlgebra::y_bar(const WreathElement& w, const Permutation& tau) const {
  const BasisIndex b = basis(w, tau);
  return y_bar(b.element, b.tau);
}

AlgebraVector ConvolutionAlgebra::y_bar_sum(std::size_t element) const {
  AlgebraVector out;
  for (std::size_t t = 0; t < taus_.size(); ++t)
    for (std::size_t u : down_set(element)) out.add(BasisIndex{u, t}, Rational(1));
  return out;
}

AlgebraVector ConvolutionAlgebra::y_bar_sum(const WreathElement& w) const {
  return y_bar_sum(basis(w, Permutation(d())).element);
}

AlgebraVector ConvolutionAlgebra::y_sum(const WreathElement& w) const {
  const std::size_t idx = basis(w, Permutation(d())).element;
  AlgebraVector out;
  for (std::size_t t = 0; t < taus_.size(); ++t) out.add(BasisIndex{idx, t}, Rational(1));
  return out;
}

AlgebraVector ConvolutionAlgebra::lambda0_identity() const { return y_bar_sum(WreathElement::identity(m(), d())); }

ProductResult ConvolutionAlgebra::convolve_basis(const BasisIndex& a, const BasisIndex& b) const {
  if (a.element >= ctx_->size() || b.element >= ctx_->size() || a.tau >= taus_.size() || b.tau >= taus_.size())
    throw ContextMismatch("basis index outside this algebra");
  AlgebraVector out;
  if (tau_mul_[a.tau * taus_.size() + top_rank_[a.element]] != b.tau) return ProductResult::defined(out);
  if (!base_identity_[a.element] && !base_identity_[b.element]) return ProductResult::undefined({{a, b}});
  out.add(BasisIndex{ctx_->multiply(a.element, b.element), a.tau}, Rational(1));
  return ProductResult::defined(out);
}

ProductResult ConvolutionAlgebra::convolve(const AlgebraVector& a, const AlgebraVector& b) const {
  std::unordered_map<std::size_t, std::vector<std::pair<std::size_t, const Rational*>>> by_tau;
  for (const auto& [idx, c] : b.terms()) by_tau[idx.tau].emplace_back(idx.element, &c);
  AlgebraVector out;
  std::vector<std::pair<BasisIndex, BasisIndex>> bad;
  const std::size_t n = taus_.size();
  for (const auto& [x, cx] : a.terms()) {
    const std::size_t needed = tau_mul_[x.tau * n + top_rank_[x.element]];
    auto it = by_tau.find(needed);
    if (it == by_tau.end()) continue;
    for (const auto& [y, cy] : it->second) {
      if (!base_identity_[x.element] && !base_identity_[y]) {
        bad.emplace_back(x, BasisIndex{y, needed});
        continue;
      }
      out.add(BasisIndex{ctx_->multiply(x.element, y), x.tau}, cx * *cy);
    }
  }
  if (!bad.empty()) return ProductResult::undefined(std::move(bad));
  return ProductResult::defined(std::move(out));
}

AlgebraVector ConvolutionAlgebra::involution(const AlgebraVector& a) const {
  AlgebraVector out;
  const std::size_t n = taus_.size();
  for (const auto& [b, c] : a.terms())
    out.add(BasisIndex{ctx_->inverse(b.element), tau_mul_[b.tau * n + top_rank_[b.element]]}, c);
  return out;
}

AlgebraVector ConvolutionAlgebra::pi0_act(const Permutation& eta, const AlgebraVector& a) const {
  const std::size_t e = tau_rank(eta);
  AlgebraVector out;
  for (const auto& [b, c] : a.terms()) out.add(BasisIndex{b.element, tau_mul_[e * taus_.size() + b.tau]}, c);
  return out;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkipped:
      return "skipped";
  }
  return "fail";
}

bool RelationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.status == CheckStatus::kFail; });
}

const RelationCheck* RelationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

// Result of one relation instance: empty on success, otherwise a diagnostic.
using Outcome = std::string;

class Checker {
 public:
  explicit Checker(const ConvolutionAlgebra& alg) : alg_(alg) {}

  // Folds products left to right; records undefined products as failures.
  std::optional<AlgebraVector> product(const std::vector<AlgebraVector>& factors, Outcome& why) const {
    AlgebraVector acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) {
      ProductResult r = alg_.convolve(acc, factors[i]);
      if (!r.is_defined()) {
        const auto& p = r.offending_pairs().front();
        why = "undefined product " + alg_.describe(p.first) + " * " + alg_.describe(p.second);
        return std::nullopt;
      }
      acc = r.value();
    }
    return acc;
  }

  WreathElement gen(GeneratorKind kind, std::size_t i, std::size_t j = 1) const {
    return generator(alg_.m(), alg_.d(), kind, i, j);
  }

 private:
  const ConvolutionAlgebra& alg_;
};

RelationCheck run_instances(const std::string& name, std::size_t count,
                            const std::function<Outcome(std::size_t)>& instance, bool parallel) {
  RelationCheck check{name, CheckStatus::kSkipped, count, {}};
  if (count == 0) return check;
  std::vector<Outcome> outcomes(count);
  if (parallel && count > 1) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 16));
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w)
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < count; i += workers) outcomes[i] = instance(i);
      }));
    for (auto& j : jobs) j.get();
  } else {
    for (std::size_t i = 0; i < count; ++i) outcomes[i] = instance(i);
  }
  check.status = CheckStatus::kPass;
  for (const Outcome& o : outcomes)
    if (!o.empty()) {
      check.status = CheckStatus::kFail;
      check.detail = o;
      break;
    }
  return check;
}

}  // namespace

RelationReport verify_relations(const ConvolutionAlgebra& alg) {
  const std::size_t m = alg.m();
  const std::size_t d = alg.d();
  const Checker ck(alg);
  const WreathElement e = WreathElement::identity(m, d);
  const AlgebraVector lambda0 = alg.lambda0_identity();
  (void)alg.down_set(0);
  RelationReport report{m, d, {}};

  report.checks.push_back(run_instances("quadratic", d - 1, [&](std::size_t k) -> Outcome {
    const AlgebraVector t = alg.y_bar_sum(ck.gen(GeneratorKind::kT, k + 1));
    Outcome why;
    auto lhs = ck.product({t, t}, why);
    if (!lhs) return why;
    return *lhs == lambda0 ? Outcome{} : "t" + std::to_string(k + 1) + "^2 differs from the unit";
  }, false));

  const std::size_t wreath_count = (m > 1 && d > 1) ? (d - 1) * (m - 1) : 0;
  report.checks.push_back(run_instances("wreath", wreath_count, [&](std::size_t n) -> Outcome {
    const std::size_t j = n / (m - 1) + 1;
    const std::size_t i = n % (m - 1) + 1;
    const AlgebraVector t = alg.y_sum(ck.gen(GeneratorKind::kT, j));
    const AlgebraVector s_here = alg.y_sum(ck.gen(GeneratorKind::kS, i, j));
    const AlgebraVector s_next = alg.y_sum(ck.gen(GeneratorKind::kS, i, j + 1));
    const AlgebraVector unit = alg.y_sum(e);
    Outcome why;
    auto a = ck.product({t, s_here}, why);
    if (!a) return why;
    auto b = ck.product({t, unit}, why);
    if (!b) return why;
    auto c = ck.product({s_next, t}, why);
    if (!c) return why;
    auto f = ck.product({unit, t}, why);
    if (!f) return why;
    return (*a + *b) == (*c + *f) ? Outcome{}
                                  : "wreath relation fails for t" + std::to_string(j) + ", s" + std::to_string(i);
  }, false));

  report.checks.push_back(run_instances("braid", d >= 3 ? d - 2 : 0, [&](std::size_t n) -> Outcome {
    const AlgebraVector a = alg.y_bar_sum(ck.gen(GeneratorKind::kT, n + 1));
    const AlgebraVector b = alg.y_bar_sum(ck.gen(GeneratorKind::kT, n + 2));
    Outcome why;
    auto lhs = ck.product({a, b, a}, why);
    if (!lhs) return why;
    auto rhs = ck.product({b, a, b}, why);
    if (!rhs) return why;
    return *lhs == *rhs ? Outcome{} : "braid relation fails at t" + std::to_string(n + 1);
  }, false));

  std::vector<std::pair<std::size_t, std::size_t>> far_pairs;
  for (std::size_t i = 1; i < d; ++i)
    for (std::size_t j = i + 2; j < d; ++j) far_pairs.emplace_back(i, j);
  report.checks.push_back(run_instances("commuting", far_pairs.size(), [&](std::size_t n) -> Outcome {
    const auto [i, j] = far_pairs[n];
    const AlgebraVector a = alg.y_bar_sum(ck.gen(GeneratorKind::kT, i));
    const AlgebraVector b = alg.y_bar_sum(ck.gen(GeneratorKind::kT, j));
    Outcome why;
    auto lhs = ck.product({a, b}, why);
    if (!lhs) return why;
    auto rhs = ck.product({b, a}, why);
    if (!rhs) return why;
    return *lhs == *rhs ? Outcome{} : "t" + std::to_string(i) + " and t" + std::to_string(j) + " do not commute";
  }, false));

  const GroupContext& ctx = alg.context();
  std::vector<std::size_t> tops;
  for (std::size_t idx = 0; idx < ctx.size(); ++idx)
    if (ctx.element(idx).base_is_identity()) tops.push_back(idx);
  std::vector<AlgebraVector> bars(ctx.size());
  for (std::size_t idx = 0; idx < ctx.size(); ++idx) bars[idx] = alg.y_bar_sum(idx);

  for (const bool right : {true, false}) {
    report.checks.push_back(run_instances(right ? "product_right" : "product_left", ctx.size(),
                                          [&](std::size_t w) -> Outcome {
      for (std::size_t s : tops) {
        const std::size_t expected = right ? ctx.multiply(w, s) : ctx.multiply(s, w);
        ProductResult r = right ? alg.convolve(bars[w], bars[s]) : alg.convolve(bars[s], bars[w]);
        if (!r.is_defined())
          return "undefined product " + alg.describe(r.offending_pairs().front().first) + " * " +
                 alg.describe(r.offending_pairs().front().second);
        if (!(r.value() == bars[expected]))
          return "product identity fails for w = " + format_word(ctx.element(w)) +
                 ", sigma = " + format_word(ctx.element(s));
      }
      return {};
    }, true));
  }
  return report;
}

RelationReport verify_relations(std::size_t m, std::size_t d, std::size_t bound) {
  return verify_relations(ConvolutionAlgebra(m, d, bound));
}

BasisCensus basis_census(const ConvolutionAlgebra& alg) {
  // y_bar_sum(w) is supported on elements with the top of w, so the
  // coefficient matrix is block diagonal by top.
  BasisCensus census{alg.basis_size(), 0};
  const GroupContext& ctx = alg.context();
  std::map<Permutation, std::vector<std::size_t>> by_top;
  for (std::size_t w = 0; w < ctx.size(); ++w) by_top[ctx.element(w).top].push_back(w);
  for (const auto& [top, members] : by_top) {
    std::map<std::size_t, std::size_t> column_of;
    for (std::size_t u : members) column_of.emplace(u, column_of.size());
    Matrix block(members.size(), members.size() * alg.tau_count());
    for (std::size_t r = 0; r < members.size(); ++r) {
      const AlgebraVector row = alg.y_bar_sum(members[r]);
      for (const auto& [b, c] : row.terms()) block(r, column_of.at(b.element) * alg.tau_count() + b.tau) = c;
    }
    census.span_rank += rank(block);
  }
  return census;
}

}  // namespace wreath
