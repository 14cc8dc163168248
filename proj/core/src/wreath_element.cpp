#include "wreath/wreath_element.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include "wreath/bruhat.hpp"
#include "wreath/errors.hpp"

namespace wreath {

namespace {

void require_same_ambient(const WreathElement& a, const WreathElement& b, const char* what) {
  if (a.m() != b.m() || a.d() != b.d())
    throw ContextMismatch(std::string(what) + ": elements of different wreath products");
}

}  // namespace

std::size_t enumeration_bound() {
  if (const char* env = std::getenv(kEnumerationBoundEnv)) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return kDefaultEnumerationBound;
}

WreathElement WreathElement::identity(std::size_t m, std::size_t d) {
  return WreathElement{std::vector<Permutation>(d, Permutation(m)), Permutation(d)};
}

bool WreathElement::is_identity() const { return top.is_identity() && base_is_identity(); }

bool WreathElement::base_is_identity() const {
  for (const auto& f : factors)
    if (!f.is_identity()) return false;
  return true;
}

WreathElement multiply(const WreathElement& a, const WreathElement& b) {
  require_same_ambient(a, b, "multiply");
  const std::size_t d = a.d();
  const Permutation sigma_inv = inverse(a.top);
  WreathElement out;
  out.factors.reserve(d);
  for (std::size_t i = 0; i < d; ++i)
    out.factors.push_back(a.factors[i] * b.factors[static_cast<std::size_t>(sigma_inv(i))]);
  out.top = a.top * b.top;
  return out;
}

WreathElement inverse(const WreathElement& a) {
  const std::size_t d = a.d();
  WreathElement out;
  out.factors.reserve(d);
  for (std::size_t i = 0; i < d; ++i)
    out.factors.push_back(inverse(a.factors[static_cast<std::size_t>(a.top(i))]));
  out.top = inverse(a.top);
  return out;
}

Permutation embed(const WreathElement& a) {
  const std::size_t m = a.m();
  const std::size_t d = a.d();
  std::vector<int> images(m * d);
  // position (block j, offset k) -> (block sigma(j), offset k), then the
  // factor of the target block acts on the offset.
  for (std::size_t j = 0; j < d; ++j) {
    const auto target = static_cast<std::size_t>(a.top(j));
    for (std::size_t k = 0; k < m; ++k) {
      const auto offset = static_cast<std::size_t>(a.factors[target](k));
      images[j * m + k] = static_cast<int>(target * m + offset) + 1;
    }
  }
  return Permutation::from_one_line(images);
}

std::string Generator::to_string() const {
  if (kind == GeneratorKind::kT) return "t" + std::to_string(index);
  return "s" + std::to_string(index) + "^" + std::to_string(block);
}

WreathElement generator(std::size_t m, std::size_t d, const Generator& g) {
  WreathElement out = WreathElement::identity(m, d);
  if (g.kind == GeneratorKind::kS) {
    if (g.index < 1 || g.index + 1 > m || g.block < 1 || g.block > d)
      throw std::out_of_range("generator " + g.to_string() + " outside S_" + std::to_string(m) +
                              " wr S_" + std::to_string(d));
    out.factors[g.block - 1] = Permutation::simple(m, g.index);
  } else {
    if (g.index < 1 || g.index + 1 > d)
      throw std::out_of_range("generator " + g.to_string() + " outside S_" + std::to_string(m) +
                              " wr S_" + std::to_string(d));
    out.top = Permutation::simple(d, g.index);
  }
  return out;
}

WreathElement generator(std::size_t m, std::size_t d, GeneratorKind kind, std::size_t i, std::size_t j) {
  return generator(m, d, Generator{kind, i, j});
}

std::vector<Generator> parse_generators(std::string_view text, std::size_t m, std::size_t d) {
  std::vector<Generator> word;
  std::size_t pos = 0;
  auto read_int = [&](const char* what) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos)
      throw std::invalid_argument(std::string("expected ") + what + " in word '" + std::string(text) + "'");
    return static_cast<std::size_t>(std::stoul(std::string(text.substr(start, pos - start))));
  };
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++pos;
      continue;
    }
    const bool at_token_end = [&] {
      return pos + 1 >= text.size() || std::isspace(static_cast<unsigned char>(text[pos + 1])) ||
             text[pos + 1] == '*';
    }();
    if (c == 'e' && at_token_end) {
      ++pos;
      continue;
    }
    if (c == 's') {
      ++pos;
      const std::size_t i = read_int("simple index");
      if (pos >= text.size() || text[pos] != '^')
        throw std::invalid_argument("expected '^<block>' after s" + std::to_string(i));
      ++pos;
      const std::size_t j = read_int("block index");
      word.push_back(Generator{GeneratorKind::kS, i, j});
    } else if (c == 't') {
      ++pos;
      word.push_back(Generator{GeneratorKind::kT, read_int("top index"), 1});
    } else {
      throw std::invalid_argument("unexpected character '" + std::string(1, c) + "' in word '" +
                                  std::string(text) + "'");
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != '*')
      throw std::invalid_argument("tokens must be separated by whitespace in '" + std::string(text) + "'");
  }
  for (const auto& g : word) (void)generator(m, d, g);  // range check
  return word;
}

WreathElement evaluate_word(std::size_t m, std::size_t d, const std::vector<Generator>& word) {
  WreathElement out = WreathElement::identity(m, d);
  for (const auto& g : word) out = out * generator(m, d, g);
  return out;
}

WreathElement parse_word(std::string_view text, std::size_t m, std::size_t d) {
  return evaluate_word(m, d, parse_generators(text, m, d));
}

std::vector<Generator> canonical_word(const WreathElement& a) {
  std::vector<Generator> word;
  for (std::size_t j = 0; j < a.d(); ++j)
    for (std::size_t i : reduced_word(a.factors[j])) word.push_back(Generator{GeneratorKind::kS, i, j + 1});
  for (std::size_t k : reduced_word(a.top)) word.push_back(Generator{GeneratorKind::kT, k, 1});
  return word;
}

std::string format_word(const WreathElement& a) {
  const auto word = canonical_word(a);
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += " ";
    s += word[i].to_string();
  }
  return s;
}

bool bruhat_leq(const WreathElement& x, const WreathElement& y) {
  require_same_ambient(x, y, "bruhat_leq");
  if (x.top != y.top) return false;
  for (std::size_t i = 0; i < x.d(); ++i)
    if (!bruhat_leq(x.factors[i], y.factors[i])) return false;
  return true;
}

std::size_t cell_dimension(const WreathElement& a) {
  std::size_t total = 0;
  for (const auto& f : a.factors) total += length(f);
  return total;
}

}  // namespace wreath
