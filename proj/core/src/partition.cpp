#include "wreath/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace wreath {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ' && c != '[' && c != ']') s.push_back(c);
  if (s.empty() || s == "-" || s == "0") return Partition();
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = std::min(s.find(',', pos), s.size());
    const std::string token = s.substr(pos, comma - pos);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad partition '" + std::string(text) + "'");
    parts.push_back(std::stoi(token));
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> current;
  // Largest first part first gives lexicographically descending order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::uint64_t partition_count(int n) {
  if (n < 0) return 0;
  std::vector<std::uint64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int k = part; k <= n; ++k) p[k] += p[k - part];
  return p[n];
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts;
  const int first = lambda.empty() ? 0 : lambda[0];
  for (int j = 0; j < first; ++j) {
    int count = 0;
    for (int part : lambda.parts())
      if (part > j) ++count;
    parts.push_back(count);
  }
  return Partition(std::move(parts));
}

std::uint64_t hook_dim(const Partition& lambda) {
  const Partition transpose = conjugate(lambda);
  // n! / prod(hooks), accumulated as a reduced fraction to stay in range.
  std::uint64_t numerator = 1;
  std::uint64_t denominator = 1;
  int k = 0;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      const int hook = (lambda[i] - j - 1) + (transpose[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
      numerator *= static_cast<std::uint64_t>(++k);
      denominator *= static_cast<std::uint64_t>(hook);
      const std::uint64_t g = std::gcd(numerator, denominator);
      numerator /= g;
      denominator /= g;
    }
  }
  return numerator / denominator;
}

int n_stat(const Partition& lambda) {
  int total = 0;
  for (std::size_t i = 0; i < lambda.length(); ++i) total += static_cast<int>(i) * lambda[i];
  return total;
}

std::vector<StandardTableau> standard_tableaux(const Partition& lambda) {
  const int n = lambda.size();
  std::vector<StandardTableau> out;
  std::vector<int> row_fill(lambda.length(), 0);
  StandardTableau current;
  current.cells.reserve(static_cast<std::size_t>(n));
  std::function<void()> rec = [&]() {
    if (static_cast<int>(current.cells.size()) == n) {
      out.push_back(current);
      return;
    }
    for (std::size_t r = 0; r < lambda.length(); ++r) {
      const bool room = row_fill[r] < lambda[r];
      const bool supported = r == 0 || row_fill[r - 1] > row_fill[r];
      if (!room || !supported) continue;
      current.cells.emplace_back(static_cast<int>(r), row_fill[r]);
      ++row_fill[r];
      rec();
      --row_fill[r];
      current.cells.pop_back();
    }
  };
  rec();
  return out;
}

}  // namespace wreath
