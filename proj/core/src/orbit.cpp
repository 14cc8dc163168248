#include "wreath/orbit.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace wreath {

JordanProfile JordanProfile::make(std::size_t m, std::vector<Partition> types) {
  if (types.empty()) throw std::invalid_argument("Jordan profile needs d >= 1");
  for (const auto& t : types)
    if (t.size() != static_cast<int>(m))
      throw std::invalid_argument("Jordan type (" + t.to_string() + ") does not partition " + std::to_string(m));
  return JordanProfile{m, std::move(types)};
}

OrbitLabel orbit_label(const JordanProfile& p) {
  (void)JordanProfile::make(p.m, p.types);
  OrbitLabel label{p.m, p.types};
  std::sort(label.types.begin(), label.types.end(), canonical_before);
  return label;
}

JordanProfile profile_of(const OrbitLabel& orbit) { return JordanProfile::make(orbit.m, orbit.types); }

Partition jordan_type(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("jordan_type: matrix is not square");
  const std::size_t n = a.rows();
  if (!power(a, n).is_zero()) throw std::invalid_argument("jordan_type: matrix is not nilpotent");
  std::vector<int> conjugate_parts;
  std::size_t previous_rank = n;
  Matrix current = Matrix::identity(n);
  for (std::size_t k = 1; previous_rank > 0; ++k) {
    current = current * a;
    const std::size_t r = rank(current);
    conjugate_parts.push_back(static_cast<int>(previous_rank - r));
    previous_rank = r;
  }
  return conjugate(Partition(conjugate_parts));
}

GammaMap gamma_of(const JordanProfile& p) { return gamma_of(orbit_label(p)); }

GammaMap component_group(const JordanProfile& p) { return gamma_of(p); }

std::size_t orbit_dim(const JordanProfile& p) {
  std::size_t total = 0;
  for (const auto& lambda : p.types) {
    std::size_t squares = 0;
    const Partition dual = conjugate(lambda);
    for (int part : dual.parts()) squares += static_cast<std::size_t>(part * part);
    total += p.m * p.m - squares;
  }
  return total;
}

std::size_t fiber_dim(const JordanProfile& p) {
  std::size_t total = 0;
  for (const auto& lambda : p.types) total += static_cast<std::size_t>(n_stat(lambda));
  return total;
}

bool check_dimension_property(const JordanProfile& p) {
  const std::size_t orbit = orbit_dim(p);
  if (orbit % 2 != 0) throw std::logic_error("odd nilpotent orbit dimension");
  const std::size_t flag_dim = p.d() * p.m * (p.m - 1) / 2;
  return orbit / 2 <= flag_dim && fiber_dim(p) == flag_dim - orbit / 2;
}

std::vector<JordanProfile> enumerate_profiles(std::size_t m, std::size_t d, std::size_t bound) {
  const std::vector<Partition> keys = partitions_of(static_cast<int>(m));
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < d; ++i) {
    count *= keys.size();
    if (count > bound) throw BoundExceeded("profile enumeration exceeds the enumeration bound");
  }
  std::vector<JordanProfile> out;
  JordanProfile current{m, {}};
  std::function<void()> rec = [&]() {
    if (current.types.size() == d) {
      out.push_back(current);
      return;
    }
    for (const auto& nu : keys) {
      current.types.push_back(nu);
      rec();
      current.types.pop_back();
    }
  };
  rec();
  return out;
}

std::vector<SpringerLabel> enumerate_IS(std::size_t m, std::size_t d, std::size_t bound) {
  std::vector<SpringerLabel> out;
  for (const OrbitLabel& orbit : enumerate_orbits(m, d)) {
    for (CliffordLabel& psi : labels_with_gamma(m, gamma_of(orbit))) {
      out.push_back(SpringerLabel{orbit, std::move(psi)});
      if (out.size() > bound) throw BoundExceeded("I^S enumeration exceeds the enumeration bound");
    }
  }
  return out;
}

}  // namespace wreath
