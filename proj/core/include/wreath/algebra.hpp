#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "wreath/group_context.hpp"
#include "wreath/rational.hpp"

namespace wreath {

/// Basis class [Y_{w,tau}]: `element` indexes GroupContext::elements(), `tau`
/// is the lex rank of tau in S_d.
struct BasisIndex {
  std::size_t element = 0;
  std::size_t tau = 0;

  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

/// Finitely supported rational combination of basis classes; zero
/// coefficients are never stored.
class AlgebraVector {
 public:
  AlgebraVector() = default;

  const std::map<BasisIndex, Rational>& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const BasisIndex& b) const;

  void add(const BasisIndex& b, const Rational& c);
  AlgebraVector& operator+=(const AlgebraVector& other);
  AlgebraVector& operator-=(const AlgebraVector& other);

  friend AlgebraVector operator+(AlgebraVector a, const AlgebraVector& b) { return a += b; }
  friend AlgebraVector operator-(AlgebraVector a, const AlgebraVector& b) { return a -= b; }
  friend AlgebraVector operator*(const Rational& s, const AlgebraVector& a);
  friend bool operator==(const AlgebraVector&, const AlgebraVector&) = default;

 private:
  std::map<BasisIndex, Rational> terms_;
};

/// A convolution product: either a value or the basis pairs whose product is
/// not covered by the transversal cases.
class ProductResult {
 public:
  static ProductResult defined(AlgebraVector value);
  /// Throws std::invalid_argument when `pairs` is empty.
  static ProductResult undefined(std::vector<std::pair<BasisIndex, BasisIndex>> pairs);

  bool is_defined() const { return defined_; }
  /// Throws std::logic_error on an undefined product.
  const AlgebraVector& value() const;
  const std::vector<std::pair<BasisIndex, BasisIndex>>& offending_pairs() const { return pairs_; }

 private:
  bool defined_ = true;
  AlgebraVector value_;
  std::vector<std::pair<BasisIndex, BasisIndex>> pairs_;
};

/// The basis-class model of top Borel-Moore homology of the wreath Steinberg
/// variety, with the partial convolution product.
class ConvolutionAlgebra {
 public:
  explicit ConvolutionAlgebra(std::shared_ptr<const GroupContext> ctx);
  ConvolutionAlgebra(std::size_t m, std::size_t d, std::size_t bound = enumeration_bound());

  const GroupContext& context() const { return *ctx_; }
  std::size_t m() const { return ctx_->m(); }
  std::size_t d() const { return ctx_->d(); }
  std::size_t tau_count() const { return taus_.size(); }
  const Permutation& tau(std::size_t rank) const { return taus_[rank]; }
  std::size_t tau_rank(const Permutation& tau) const;

  /// |G| * d! basis classes.
  std::size_t basis_size() const { return ctx_->size() * taus_.size(); }
  BasisIndex basis(const WreathElement& w, const Permutation& tau) const;
  std::string describe(const BasisIndex& b) const;

  /// sum_{w' <= w} [Y_{w',tau}].
  AlgebraVector y_bar(const WreathElement& w, const Permutation& tau) const;
  AlgebraVector y_bar(std::size_t element, std::size_t tau) const;
  /// sum_tau y_bar(w, tau).
  AlgebraVector y_bar_sum(const WreathElement& w) const;
  AlgebraVector y_bar_sum(std::size_t element) const;
  /// sum_tau [Y_{w,tau}].
  AlgebraVector y_sum(const WreathElement& w) const;
  /// [Lambda^0_e] = y_bar_sum(e).
  AlgebraVector lambda0_identity() const;

  /// [Y_{w,tau}] * [Y_{w',tau'}]: zero unless tau sigma = tau' (sigma the top
  /// of w); [Y_{ww',tau}] when one of the factor tuples is trivial; undefined
  /// otherwise.
  ProductResult convolve_basis(const BasisIndex& a, const BasisIndex& b) const;
  ProductResult convolve(const AlgebraVector& a, const AlgebraVector& b) const;

  /// [Y_{w,tau}] -> [Y_{w^-1, tau sigma_w}], extended linearly.
  AlgebraVector involution(const AlgebraVector& a) const;
  /// [Y_{w,tau}] -> [Y_{w, eta tau}], extended linearly.
  AlgebraVector pi0_act(const Permutation& eta, const AlgebraVector& a) const;

  /// Indices w' <= w, ascending.
  const std::vector<std::size_t>& down_set(std::size_t element) const;

 private:
  void build_down_sets() const;

  std::shared_ptr<const GroupContext> ctx_;
  std::vector<Permutation> taus_;
  std::vector<std::size_t> top_rank_;   // per element
  std::vector<bool> base_identity_;     // per element
  std::vector<std::size_t> tau_mul_;    // tau_mul_[a * n + b] = rank(tau_a tau_b)
  mutable std::once_flag down_once_;
  mutable std::vector<std::vector<std::size_t>> down_sets_;
};

enum class CheckStatus { kPass, kFail, kSkipped };
std::string to_string(CheckStatus s);

struct RelationCheck {
  std::string name;
  CheckStatus status = CheckStatus::kSkipped;
  std::size_t instances = 0;
  std::string detail;
};

struct RelationReport {
  std::size_t m = 0;
  std::size_t d = 0;
  std::vector<RelationCheck> checks;

  bool passed() const;
  const RelationCheck* find(const std::string& name) const;
};

/// Checks, in this order: quadratic, wreath (q-independent form), braid,
/// commuting, product_right, product_left. An undefined product in any check
/// is a failure.
RelationReport verify_relations(const ConvolutionAlgebra& algebra);
RelationReport verify_relations(std::size_t m, std::size_t d, std::size_t bound = enumeration_bound());

struct BasisCensus {
  std::size_t basis_size = 0;
  /// Exact rank of the coefficient matrix of {y_bar_sum(w)}.
  std::size_t span_rank = 0;
};

BasisCensus basis_census(const ConvolutionAlgebra& algebra);

}  // namespace wreath
