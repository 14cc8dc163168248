#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wreath/labels.hpp"
#include "wreath/partition.hpp"
#include "wreath/rational.hpp"

namespace wreath {

/// Psi(lambda) = [x_lambda, S^lambda]: the orbit with gamma = |lambda|.
/// Throws std::invalid_argument on a label with no entries.
SpringerLabel psi(const CliffordLabel& lambda);
/// Inverse of psi; throws std::invalid_argument when |psi| != gamma(orbit).
CliffordLabel psi_inv(const SpringerLabel& label);

struct SpringerCheck {
  SpringerLabel label;
  bool characters_match = false;
  Rational isotypic_dimension;
  Rational clifford_dimension;
};

struct SpringerReport {
  std::size_t m = 0;
  std::size_t d = 0;
  std::vector<SpringerCheck> checks;
  std::size_t ic_count = 0;
  std::size_t is_count = 0;
  std::size_t class_count = 0;
  /// psi is injective on I^C and its image is I^S.
  bool bijective = false;
  /// sum_psi dim psi * dim of the psi-part equals dim M(x), for every orbit.
  bool dimensions_add_up = false;

  bool passed() const;
};

/// Compares, for every [x, psi] in I^S, the character of the psi-isotypic part
/// of M(x) with the character of L^{psi^-1([x, psi])}. Orbits run in parallel.
SpringerReport verify_springer(std::size_t m, std::size_t d);

struct TypeBRow {
  Partition first;   // lambda((2))
  Partition second;  // lambda((1,1))
  CliffordLabel label;
  SpringerLabel springer;
};

/// One row per bipartition of d, in enumerate_IC(2, d) order.
std::vector<TypeBRow> typeB_table(std::size_t d);

enum class HuSign { kNone, kPlus, kMinus };
std::string to_string(HuSign s);

/// [nu', nu''] (unordered, sign kNone) or [nu, nu]_+ / [nu, nu]_-.
struct HuLabel {
  Partition first;
  Partition second;
  HuSign sign = HuSign::kNone;

  /// Normalizes the pair order; throws std::invalid_argument when the sign
  /// does not match whether the partitions are equal.
  static HuLabel make(Partition a, Partition b, HuSign sign);
  std::string to_string() const;

  friend auto operator<=>(const HuLabel&, const HuLabel&) = default;
  friend bool operator==(const HuLabel&, const HuLabel&) = default;
};

/// Image of I^C(m, 2) under lambda(nu) = (2) -> [nu,nu]_+, (1,1) -> [nu,nu]_-,
/// lambda(nu') = lambda(nu'') = (1) -> [nu', nu''], in enumerate_IC order.
std::vector<HuLabel> hu_index(std::size_t m);
HuLabel hu_of(const CliffordLabel& lambda);
/// Throws std::invalid_argument for a label whose entries do not partition m.
CliffordLabel clifford_of(const HuLabel& label, std::size_t m);

struct TypeDRow {
  HuLabel index;
  /// Jordan type of x in N_a x N_{d-a}.
  Partition x_first;
  Partition x_second;
  /// (1) for distinct pairs, (2) or (1,1) for the signed ones.
  Partition psi;
};

/// Unordered distinct bipartitions of d, followed (d even) by [nu,nu]_+ and
/// [nu,nu]_- for nu of size d/2.
std::vector<TypeDRow> typeD_table(std::size_t d);

}  // namespace wreath
