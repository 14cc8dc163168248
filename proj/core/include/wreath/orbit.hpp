#pragma once

#include <cstddef>
#include <vector>

#include "wreath/errors.hpp"
#include "wreath/labels.hpp"
#include "wreath/matrix.hpp"
#include "wreath/partition.hpp"

namespace wreath {

/// Jordan types (lambda_1, ..., lambda_d) of a tuple x = (x_i)_i of nilpotent
/// m x m matrices.
struct JordanProfile {
  std::size_t m = 0;
  std::vector<Partition> types;

  /// Throws std::invalid_argument when an entry does not partition m or d == 0.
  static JordanProfile make(std::size_t m, std::vector<Partition> types);
  std::size_t d() const { return types.size(); }

  friend auto operator<=>(const JordanProfile&, const JordanProfile&) = default;
  friend bool operator==(const JordanProfile&, const JordanProfile&) = default;
};

/// Canonical orbit representative; invariant under place permutations.
OrbitLabel orbit_label(const JordanProfile& p);
JordanProfile profile_of(const OrbitLabel& orbit);

/// Jordan type of a nilpotent matrix from exact ranks: the conjugate partition
/// has parts rank(A^{k-1}) - rank(A^k). Throws std::invalid_argument when A is
/// not square or not nilpotent.
Partition jordan_type(const Matrix& a);

/// gamma(nu) = #{i : lambda_i = nu}.
GammaMap gamma_of(const JordanProfile& p);

/// Component group C(x), the Young subgroup prod_nu S_{gamma(nu)}; its
/// order is GammaMap::young_order().
GammaMap component_group(const JordanProfile& p);

/// sum_i (m^2 - sum_j (lambda_i')_j^2).
std::size_t orbit_dim(const JordanProfile& p);
/// sum_i n(lambda_i).
std::size_t fiber_dim(const JordanProfile& p);
/// fiber_dim == d m (m-1)/2 - orbit_dim/2. Throws std::logic_error on an odd orbit dimension.
bool check_dimension_property(const JordanProfile& p);

/// All d-tuples of partitions of m (not reduced modulo S_d), in lexicographic
/// order of canonical key indices.
std::vector<JordanProfile> enumerate_profiles(std::size_t m, std::size_t d,
                                              std::size_t bound = enumeration_bound());

struct SpringerLabel;
/// One label per (orbit, irreducible of S_gamma); throws BoundExceeded when the
/// label count would exceed `bound`.
std::vector<SpringerLabel> enumerate_IS(std::size_t m, std::size_t d, std::size_t bound = enumeration_bound());

}  // namespace wreath
