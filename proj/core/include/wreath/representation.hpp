#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wreath/group_context.hpp"
#include "wreath/labels.hpp"
#include "wreath/matrix.hpp"
#include "wreath/orbit.hpp"
#include "wreath/partition.hpp"

namespace wreath {

/// Largest |lambda| accepted by specht_rep().
inline constexpr int kSpechtBound = 7;

/// Shared, lazily built context for a shape; contexts are cached process-wide.
/// Throws BoundExceeded when the order exceeds enumeration_bound().
std::shared_ptr<const GroupContext> context_for(const WreathShape& shape);

/// Matrix representation of S_m wr S_Y given on WreathShape::generators().
///
/// The constructor multiplies out the defining relations (Coxeter relations
/// per block, commuting blocks, Coxeter relations of the t_k, and
/// t_k s_i^(j) t_k = s_i^(t_k(j))) and throws std::invalid_argument on failure.
class Representation {
 public:
  /// Throws std::invalid_argument when a matrix has the wrong size or a relation fails.
  Representation(WreathShape shape, std::size_t dimension, std::vector<Matrix> generator_matrices);

  static Representation trivial(const WreathShape& shape);

  const WreathShape& shape() const { return shape_; }
  std::size_t dimension() const { return dim_; }
  const std::vector<Matrix>& generator_matrices() const { return gens_; }
  /// Matrix of the generator g; throws std::out_of_range when g is not a generator of the shape.
  const Matrix& generator_matrix(const Generator& g) const;
  /// Product of generator matrices along the canonical word of x.
  Matrix image(const WreathElement& x) const;

 private:
  WreathShape shape_;
  std::size_t dim_ = 0;
  std::vector<Matrix> gens_;
  std::map<Generator, std::size_t> slot_;
};

/// Young's seminormal matrices of s_1, ..., s_{n-1} on the standard tableaux
/// of lambda (in standard_tableaux() order).
std::vector<Matrix> specht_generators(const Partition& lambda);
/// S^lambda as a representation of S_n = S_n wr S_1. Throws BoundExceeded when
/// |lambda| > kSpechtBound and std::invalid_argument for the empty partition.
Representation specht_rep(const Partition& lambda);

/// Class function stored on the conjugacy classes of its context.
struct Character {
  std::shared_ptr<const GroupContext> ctx;
  std::vector<Rational> values;  // one per class, in conjugacy_classes() order

  Rational dimension() const { return values.at(ctx->class_of(0)); }
  Rational at(const WreathElement& x) const { return values.at(ctx->class_of(ctx->index_of(x))); }
  friend bool operator==(const Character& a, const Character& b) { return a.values == b.values; }
};

/// Traces on class representatives.
Character character(const Representation& rho);
Character character(const std::shared_ptr<const GroupContext>& ctx, const Representation& rho);
/// (1/|G|) sum_g a(g) b(g^-1). Throws ContextMismatch for different groups.
Rational inner_product(const Character& a, const Character& b);

/// Factorwise tensor product; both operands on the same shape.
Representation tensor_product(const Representation& a, const Representation& b);
/// S^{lambda_1} x ... x S^{lambda_d} for the base group S_m^d.
Representation base_tensor(std::size_t m, const std::vector<Partition>& factors);
/// S~^gamma: the base group acts factorwise, S_gamma by place permutations.
Representation extend_to_wreath(std::size_t m, const GammaMap& gamma);
/// Infl S^lambda on S_m wr S_gamma, gamma = |lambda|: base group trivial.
Representation inflate(const CliffordLabel& lambda);
/// Induction to `target`, which must contain rho's shape; coset representatives are
/// the first elements of each left coset in GroupContext order.
Representation induce(const Representation& rho, const WreathShape& target);
/// Restriction to a subgroup shape contained in rho's shape.
Representation restrict_to(const Representation& rho, const WreathShape& sub);
/// L^lambda = Ind (S~^gamma (x) Infl S^lambda).
Representation clifford_irrep(const CliffordLabel& lambda);

/// M(x) with its commuting actions: `left` of S_m wr S_d, and `right_group`,
/// a left representation of S_gamma = S_1 wr S_gamma with rho(c) = R(c^-1).
struct BimoduleModel {
  OrbitLabel orbit;
  Representation left;
  Representation right_group;

  std::size_t dimension() const { return left.dimension(); }
};

/// Ind_{S_m^d}^{S_m wr S_d} of the tensor product over the canonical profile,
/// with S_gamma acting on cosets by (e, sigma) (x) v -> (e, sigma c) (x) P(c^-1) v.
/// Throws std::logic_error if the actions fail to commute.
BimoduleModel springer_module(const JordanProfile& profile);

/// Character of the psi-multiplicity space:
/// (1/|S_gamma|) sum_c psi(c^-1) Tr(L(g) R(c)). Throws std::invalid_argument
/// unless psi.gamma() equals gamma of the orbit.
Character isotypic_character(const BimoduleModel& module, const CliffordLabel& psi);

struct CharacterTable {
  std::shared_ptr<const GroupContext> ctx;
  std::vector<CliffordLabel> labels;
  std::vector<Character> rows;
};

/// Characters of all L^lambda, lambda in I^C(m, d).
CharacterTable character_table(std::size_t m, std::size_t d);

}  // namespace wreath
