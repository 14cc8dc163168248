#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wreath/partition.hpp"

namespace wreath {

/// Multiplicity map gamma: partitions of m -> counts, summing to d.
///
/// Only positive counts are stored, keys in canonical order. The associated
/// Young subgroup S_gamma uses contiguous blocks in the same order.
struct GammaMap {
  std::vector<std::pair<Partition, std::size_t>> entries;

  std::size_t total() const;
  std::size_t count(const Partition& nu) const;
  /// Block sizes of the Young subgroup, in canonical key order.
  std::vector<std::size_t> young_composition() const;
  /// |S_gamma| = prod gamma(nu)!.
  std::uint64_t young_order() const;
  std::string to_string() const;

  friend auto operator<=>(const GammaMap&, const GammaMap&) = default;
  friend bool operator==(const GammaMap&, const GammaMap&) = default;
};

/// Canonical representative of an S_d-orbit of Jordan profiles: the d
/// partitions of m sorted in canonical order.
struct OrbitLabel {
  std::size_t m = 0;
  std::vector<Partition> types;

  std::size_t d() const { return types.size(); }
  std::string to_string() const;

  friend auto operator<=>(const OrbitLabel&, const OrbitLabel&) = default;
  friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;
};

GammaMap gamma_of(const OrbitLabel& orbit);

/// Clifford label: a map from partitions of m to partitions whose sizes sum to d
/// (a multipartition indexed by the partitions of m). Empty values are not stored.
struct CliffordLabel {
  std::size_t m = 0;
  std::vector<std::pair<Partition, Partition>> entries;

  /// Builds from arbitrary-order pairs; drops empty values and sorts keys.
  /// Throws std::invalid_argument on a key that does not partition m or on a
  /// repeated key.
  static CliffordLabel make(std::size_t m, std::vector<std::pair<Partition, Partition>> pairs);

  std::size_t d() const;
  /// gamma(nu) = |lambda(nu)|.
  GammaMap gamma() const;
  /// lambda(nu), empty when nu is not a key.
  Partition at(const Partition& nu) const;
  std::string to_string() const;

  friend auto operator<=>(const CliffordLabel&, const CliffordLabel&) = default;
  friend bool operator==(const CliffordLabel&, const CliffordLabel&) = default;
};

/// Canonical pair [x, psi]: an orbit and an irreducible of its component
/// group S_gamma, encoded as the Clifford label with |psi| = gamma(orbit).
struct SpringerLabel {
  OrbitLabel orbit;
  CliffordLabel psi;

  std::string to_string() const;

  friend auto operator<=>(const SpringerLabel&, const SpringerLabel&) = default;
  friend bool operator==(const SpringerLabel&, const SpringerLabel&) = default;
};

/// All Clifford labels for S_m wr S_d in canonical order: gamma vectors in
/// lexicographically descending order, then values in canonical order.
std::vector<CliffordLabel> enumerate_IC(std::size_t m, std::size_t d);

/// All orbit labels (multisets of d partitions of m) in canonical order.
std::vector<OrbitLabel> enumerate_orbits(std::size_t m, std::size_t d);

/// Every assignment nu -> lambda(nu) with |lambda(nu)| = gamma(nu).
std::vector<CliffordLabel> labels_with_gamma(std::size_t m, const GammaMap& gamma);

}  // namespace wreath
