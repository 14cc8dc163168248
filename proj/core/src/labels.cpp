#include "wreath/labels.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "wreath/permutation.hpp"

namespace wreath {

std::size_t GammaMap::total() const {
  std::size_t t = 0;
  for (const auto& [nu, c] : entries) t += c;
  return t;
}

std::size_t GammaMap::count(const Partition& nu) const {
  for (const auto& [key, c] : entries)
    if (key == nu) return c;
  return 0;
}

std::vector<std::size_t> GammaMap::young_composition() const {
  std::vector<std::size_t> out;
  for (const auto& [nu, c] : entries) out.push_back(c);
  return out;
}

std::uint64_t GammaMap::young_order() const {
  std::uint64_t order = 1;
  for (const auto& [nu, c] : entries) order *= factorial(c);
  return order;
}

std::string GammaMap::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += "; ";
    s += "(" + entries[i].first.to_string() + "):" + std::to_string(entries[i].second);
  }
  return s + "}";
}

std::string OrbitLabel::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (i) s += " ";
    s += "(" + types[i].to_string() + ")";
  }
  return s + "]";
}

GammaMap gamma_of(const OrbitLabel& orbit) {
  std::vector<Partition> sorted = orbit.types;
  std::sort(sorted.begin(), sorted.end(), canonical_before);
  GammaMap g;
  for (const auto& nu : sorted) {
    if (!g.entries.empty() && g.entries.back().first == nu)
      ++g.entries.back().second;
    else
      g.entries.emplace_back(nu, 1);
  }
  return g;
}

CliffordLabel CliffordLabel::make(std::size_t m, std::vector<std::pair<Partition, Partition>> pairs) {
  CliffordLabel label;
  label.m = m;
  for (auto& [nu, lambda] : pairs) {
    if (nu.size() != static_cast<int>(m))
      throw std::invalid_argument("Clifford label key (" + nu.to_string() + ") does not partition " +
                                  std::to_string(m));
    if (!lambda.empty()) label.entries.emplace_back(std::move(nu), std::move(lambda));
  }
  std::sort(label.entries.begin(), label.entries.end(),
            [](const auto& a, const auto& b) { return canonical_before(a.first, b.first); });
  for (std::size_t i = 1; i < label.entries.size(); ++i)
    if (label.entries[i].first == label.entries[i - 1].first)
      throw std::invalid_argument("Clifford label repeats a key");
  return label;
}

std::size_t CliffordLabel::d() const {
  std::size_t t = 0;
  for (const auto& [nu, lambda] : entries) t += static_cast<std::size_t>(lambda.size());
  return t;
}

GammaMap CliffordLabel::gamma() const {
  GammaMap g;
  for (const auto& [nu, lambda] : entries) g.entries.emplace_back(nu, static_cast<std::size_t>(lambda.size()));
  return g;
}

Partition CliffordLabel::at(const Partition& nu) const {
  for (const auto& [key, lambda] : entries)
    if (key == nu) return lambda;
  return Partition();
}

std::string CliffordLabel::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += "; ";
    s += "(" + entries[i].first.to_string() + ")->(" + entries[i].second.to_string() + ")";
  }
  return "{" + s + "}";
}

std::string SpringerLabel::to_string() const { return "[" + orbit.to_string() + ", " + psi.to_string() + "]"; }

std::vector<CliffordLabel> labels_with_gamma(std::size_t m, const GammaMap& gamma) {
  std::vector<CliffordLabel> out;
  std::vector<std::pair<Partition, Partition>> current;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == gamma.entries.size()) {
      out.push_back(CliffordLabel::make(m, current));
      return;
    }
    const auto& [nu, count] = gamma.entries[k];
    for (const Partition& lambda : partitions_of(static_cast<int>(count))) {
      current.emplace_back(nu, lambda);
      rec(k + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<CliffordLabel> enumerate_IC(std::size_t m, std::size_t d) {
  const std::vector<Partition> keys = partitions_of(static_cast<int>(m));
  std::vector<CliffordLabel> out;
  std::vector<std::size_t> counts(keys.size(), 0);
  // Compositions of d over the keys, lexicographically descending.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t remaining) {
    if (k + 1 == keys.size()) {
      counts[k] = remaining;
      GammaMap gamma;
      for (std::size_t i = 0; i < keys.size(); ++i)
        if (counts[i] > 0) gamma.entries.emplace_back(keys[i], counts[i]);
      for (auto& label : labels_with_gamma(m, gamma)) out.push_back(std::move(label));
      return;
    }
    for (std::size_t c = remaining + 1; c-- > 0;) {
      counts[k] = c;
      rec(k + 1, remaining - c);
    }
  };
  rec(0, d);
  return out;
}

std::vector<OrbitLabel> enumerate_orbits(std::size_t m, std::size_t d) {
  const std::vector<Partition> keys = partitions_of(static_cast<int>(m));
  std::vector<OrbitLabel> out;
  OrbitLabel current{m, {}};
  // Non-decreasing key indices = canonically sorted multisets.
  std::function<void(std::size_t)> rec = [&](std::size_t first) {
    if (current.types.size() == d) {
      out.push_back(current);
      return;
    }
    for (std::size_t k = first; k < keys.size(); ++k) {
      current.types.push_back(keys[k]);
      rec(k);
      current.types.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace wreath
