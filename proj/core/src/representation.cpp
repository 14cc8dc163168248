#include "wreath/representation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

namespace wreath {

namespace {

Matrix kronecker_all(const std::vector<Matrix>& parts) {
  Matrix out = Matrix::identity(1);
  for (const Matrix& p : parts) out = kronecker(out, p);
  return out;
}

// I (x) ... (x) a (x) ... (x) I with `a` in tensor slot `slot`.
Matrix in_slot(const std::vector<std::size_t>& dims, std::size_t slot, const Matrix& a) {
  std::size_t before = 1;
  std::size_t after = 1;
  for (std::size_t i = 0; i < slot; ++i) before *= dims[i];
  for (std::size_t i = slot + 1; i < dims.size(); ++i) after *= dims[i];
  return kronecker(kronecker(Matrix::identity(before), a), Matrix::identity(after));
}

std::size_t product_of(const std::vector<std::size_t>& dims) {
  std::size_t p = 1;
  for (std::size_t v : dims) p *= v;
  return p;
}

// Exchanges tensor slots k and k+1, which must have equal dimension.
Matrix slot_swap(const std::vector<std::size_t>& dims, std::size_t k) {
  if (dims[k] != dims[k + 1]) throw std::logic_error("slot_swap: unequal factor dimensions");
  std::size_t before = 1;
  std::size_t after = 1;
  for (std::size_t i = 0; i < k; ++i) before *= dims[i];
  for (std::size_t i = k + 2; i < dims.size(); ++i) after *= dims[i];
  const std::size_t n = dims[k];
  const std::size_t total = before * n * n * after;
  Matrix out(total, total);
  for (std::size_t b = 0; b < before; ++b)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t a = 0; a < after; ++a) {
          const std::size_t from = ((b * n + x) * n + y) * after + a;
          const std::size_t to = ((b * n + y) * n + x) * after + a;
          out(to, from) = Rational(1);
        }
  return out;
}

Rational trace_of_product(const Matrix& a, const Matrix& b) {
  Rational t(0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero() && !b(j, i).is_zero()) t += a(i, j) * b(j, i);
  return t;
}

std::optional<std::string> check_relations(const WreathShape& shape, const std::vector<Matrix>& g, std::size_t dim) {
  const std::size_t m = shape.m();
  const std::size_t d = shape.d();
  const Matrix id = Matrix::identity(dim);
  std::map<Generator, std::size_t> slot;
  for (std::size_t i = 0; i < shape.generators().size(); ++i) slot.emplace(shape.generators()[i], i);
  auto s = [&](std::size_t i, std::size_t j) -> const Matrix& { return g[slot.at(Generator{GeneratorKind::kS, i, j})]; };
  auto t = [&](std::size_t k) -> const Matrix* {
    auto it = slot.find(Generator{GeneratorKind::kT, k, 1});
    return it == slot.end() ? nullptr : &g[it->second];
  };
  auto coxeter = [&](const Matrix& a, const Matrix& b, std::size_t order) {
    Matrix ab = a * b;
    return power(ab, order) == id;
  };
  for (std::size_t j = 1; j <= d; ++j)
    for (std::size_t i = 1; i < m; ++i) {
      if (!(s(i, j) * s(i, j) == id)) return "s" + std::to_string(i) + "^" + std::to_string(j) + " is not an involution";
      if (i + 1 < m && !coxeter(s(i, j), s(i + 1, j), 3)) return "braid relation fails in block " + std::to_string(j);
      for (std::size_t i2 = i + 2; i2 < m; ++i2)
        if (!coxeter(s(i, j), s(i2, j), 2)) return "far generators do not commute in block " + std::to_string(j);
      for (std::size_t j2 = j + 1; j2 <= d; ++j2)
        for (std::size_t i2 = 1; i2 < m; ++i2)
          if (!coxeter(s(i, j), s(i2, j2), 2)) return "distinct blocks do not commute";
    }
  for (std::size_t k = 1; k < d; ++k) {
    const Matrix* tk = t(k);
    if (!tk) continue;
    if (!(*tk * *tk == id)) return "t" + std::to_string(k) + " is not an involution";
    if (const Matrix* next = t(k + 1); next && !coxeter(*tk, *next, 3)) return "braid relation fails for t" + std::to_string(k);
    for (std::size_t l = k + 2; l < d; ++l)
      if (const Matrix* tl = t(l); tl && !coxeter(*tk, *tl, 2)) return "far t generators do not commute";
    for (std::size_t j = 1; j <= d; ++j) {
      const std::size_t image = j == k ? k + 1 : (j == k + 1 ? k : j);
      for (std::size_t i = 1; i < m; ++i)
        if (!(*tk * s(i, j) * *tk == s(i, image)))
          return "t" + std::to_string(k) + " does not conjugate s" + std::to_string(i) + "^" + std::to_string(j) +
                 " correctly";
    }
  }
  return std::nullopt;
}

// Base group trivial; the Young block b acts through S^{parts[b]}.
Representation young_specht(std::size_t m, const std::vector<Partition>& parts) {
  std::vector<std::size_t> young;
  std::vector<std::size_t> dims;
  std::vector<std::vector<Matrix>> block_gens;
  for (const Partition& p : parts) {
    young.push_back(static_cast<std::size_t>(p.size()));
    block_gens.push_back(specht_generators(p));
    dims.push_back(static_cast<std::size_t>(hook_dim(p)));
  }
  std::size_t d = 0;
  for (std::size_t y : young) d += y;
  WreathShape shape(m, d, young);
  const std::size_t dim = product_of(dims);
  std::vector<Matrix> gens;
  for (const Generator& g : shape.generators()) {
    if (g.kind == GeneratorKind::kS) {
      gens.push_back(Matrix::identity(dim));
      continue;
    }
    std::size_t offset = 0;
    std::size_t b = 0;
    while (g.index > offset + young[b]) offset += young[b++];
    gens.push_back(in_slot(dims, b, block_gens[b][g.index - offset - 1]));
  }
  return Representation(std::move(shape), dim, std::move(gens));
}

struct ShapeKey {
  std::size_t m;
  std::size_t d;
  std::vector<std::size_t> young;
  auto operator<=>(const ShapeKey&) const = default;
};

}  // namespace

std::shared_ptr<const GroupContext> context_for(const WreathShape& shape) {
  static std::mutex mutex;
  static std::map<ShapeKey, std::shared_ptr<const GroupContext>> cache;
  const std::size_t bound = enumeration_bound();
  std::lock_guard lock(mutex);
  ShapeKey key{shape.m(), shape.d(), shape.young()};
  auto it = cache.find(key);
  if (it != cache.end()) {
    require_within_bound(shape, bound);
    return it->second;
  }
  auto ctx = std::make_shared<const GroupContext>(shape, bound);
  cache.emplace(std::move(key), ctx);
  return ctx;
}

Representation::Representation(WreathShape shape, std::size_t dimension, std::vector<Matrix> generator_matrices)
    : shape_(std::move(shape)), dim_(dimension), gens_(std::move(generator_matrices)) {
  if (gens_.size() != shape_.generators().size())
    throw std::invalid_argument("representation needs one matrix per generator");
  for (const Matrix& g : gens_)
    if (g.rows() != dim_ || g.cols() != dim_) throw std::invalid_argument("generator matrix has the wrong size");
  for (std::size_t i = 0; i < gens_.size(); ++i) slot_.emplace(shape_.generators()[i], i);
  if (auto failure = check_relations(shape_, gens_, dim_))
    throw std::invalid_argument("representation violates a defining relation: " + *failure);
}

Representation Representation::trivial(const WreathShape& shape) {
  return Representation(shape, 1, std::vector<Matrix>(shape.generators().size(), Matrix::identity(1)));
}

const Matrix& Representation::generator_matrix(const Generator& g) const {
  auto it = slot_.find(g);
  if (it == slot_.end()) throw std::out_of_range("not a generator of this shape: " + g.to_string());
  return gens_[it->second];
}

Matrix Representation::image(const WreathElement& x) const {
  Matrix out = Matrix::identity(dim_);
  for (const Generator& g : shape_.word(x)) out = out * generator_matrix(g);
  return out;
}

std::vector<Matrix> specht_generators(const Partition& lambda) {
  const std::vector<StandardTableau> tableaux = standard_tableaux(lambda);
  std::map<std::vector<std::pair<int, int>>, std::size_t> index;
  for (std::size_t i = 0; i < tableaux.size(); ++i) index.emplace(tableaux[i].cells, i);
  const std::size_t dim = tableaux.size();
  std::vector<Matrix> out;
  for (int k = 1; k < lambda.size(); ++k) {
    Matrix s(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const StandardTableau& t = tableaux[i];
      const Rational r(t.content(k + 1) - t.content(k));
      s(i, i) = Rational(1) / r;
      std::vector<std::pair<int, int>> swapped = t.cells;
      std::swap(swapped[k - 1], swapped[k]);
      auto it = index.find(swapped);
      if (it == index.end()) continue;
      const bool lower = t.cells[k].first > t.cells[k - 1].first;
      s(it->second, i) = lower ? Rational(1) : Rational(1) - Rational(1) / (r * r);
    }
    out.push_back(std::move(s));
  }
  return out;
}

Representation specht_rep(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("specht_rep: empty partition");
  if (lambda.size() > kSpechtBound)
    throw BoundExceeded("specht_rep: |lambda| = " + std::to_string(lambda.size()) + " exceeds " +
                        std::to_string(kSpechtBound));
  const std::size_t n = static_cast<std::size_t>(lambda.size());
  return Representation(WreathShape(n, 1), static_cast<std::size_t>(hook_dim(lambda)), specht_generators(lambda));
}

Character character(const Representation& rho) { return character(context_for(rho.shape()), rho); }

Character character(const std::shared_ptr<const GroupContext>& ctx, const Representation& rho) {
  if (!(ctx->shape() == rho.shape())) throw ContextMismatch("character: context and representation differ");
  Character chi{ctx, {}};
  for (std::size_t rep : ctx->class_representatives()) chi.values.push_back(rho.image(ctx->element(rep)).trace());
  return chi;
}

Rational inner_product(const Character& a, const Character& b) {
  if (a.ctx != b.ctx && !(a.ctx->shape() == b.ctx->shape()))
    throw ContextMismatch("inner_product: characters of different groups");
  const GroupContext& ctx = *a.ctx;
  const auto& classes = ctx.conjugacy_classes();
  Rational sum(0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const std::size_t inv_class = ctx.class_of(ctx.inverse(classes[c].front()));
    sum += Rational(classes[c].size()) * a.values[c] * b.values[inv_class];
  }
  return sum / Rational(ctx.size());
}

Representation tensor_product(const Representation& a, const Representation& b) {
  if (!(a.shape() == b.shape())) throw ContextMismatch("tensor_product: different shapes");
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < a.generator_matrices().size(); ++i)
    gens.push_back(kronecker(a.generator_matrices()[i], b.generator_matrices()[i]));
  return Representation(a.shape(), a.dimension() * b.dimension(), std::move(gens));
}

namespace {

// Base group factorwise via Specht matrices; t_k (when present) swaps slots.
Representation factorwise(std::size_t m, const std::vector<Partition>& factors, std::vector<std::size_t> young) {
  const std::size_t d = factors.size();
  std::vector<std::size_t> dims;
  std::vector<std::vector<Matrix>> specht;
  for (const Partition& p : factors) {
    if (p.size() != static_cast<int>(m))
      throw std::invalid_argument("tensor factor (" + p.to_string() + ") does not partition m");
    specht.push_back(specht_generators(p));
    dims.push_back(static_cast<std::size_t>(hook_dim(p)));
  }
  WreathShape shape(m, d, std::move(young));
  std::vector<Matrix> gens;
  for (const Generator& g : shape.generators()) {
    if (g.kind == GeneratorKind::kS)
      gens.push_back(in_slot(dims, g.block - 1, specht[g.block - 1][g.index - 1]));
    else
      gens.push_back(slot_swap(dims, g.index - 1));
  }
  return Representation(std::move(shape), product_of(dims), std::move(gens));
}

}  // namespace

Representation base_tensor(std::size_t m, const std::vector<Partition>& factors) {
  return factorwise(m, factors, std::vector<std::size_t>(factors.size(), 1));
}

Representation extend_to_wreath(std::size_t m, const GammaMap& gamma) {
  std::vector<Partition> factors;
  for (const auto& [nu, count] : gamma.entries) factors.insert(factors.end(), count, nu);
  return factorwise(m, factors, gamma.young_composition());
}

Representation inflate(const CliffordLabel& lambda) {
  std::vector<Partition> parts;
  for (const auto& [nu, value] : lambda.entries) parts.push_back(value);
  return young_specht(lambda.m, parts);
}

Representation induce(const Representation& rho, const WreathShape& target) {
  const WreathShape& sub = rho.shape();
  if (!target.contains(sub)) throw std::invalid_argument("induce: subgroup not contained in the target");
  auto ctx = context_for(target);
  std::vector<WreathElement> reps;
  std::vector<WreathElement> rep_inverses;
  for (const WreathElement& g : ctx->elements()) {
    bool seen = false;
    for (const WreathElement& r_inv : rep_inverses)
      if (sub.contains(r_inv * g)) {
        seen = true;
        break;
      }
    if (seen) continue;
    reps.push_back(g);
    rep_inverses.push_back(inverse(g));
  }
  const std::size_t n = reps.size();
  const std::size_t k = rho.dimension();
  std::vector<Matrix> gens;
  for (const Generator& gen : target.generators()) {
    const WreathElement x = generator(target.m(), target.d(), gen);
    Matrix big(n * k, n * k);
    for (std::size_t i = 0; i < n; ++i) {
      const WreathElement y = x * reps[i];
      std::size_t j = 0;
      while (!sub.contains(rep_inverses[j] * y)) ++j;
      const Matrix block = rho.image(rep_inverses[j] * y);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) big(j * k + r, i * k + c) = block(r, c);
    }
    gens.push_back(std::move(big));
  }
  return Representation(target, n * k, std::move(gens));
}

Representation restrict_to(const Representation& rho, const WreathShape& sub) {
  if (!rho.shape().contains(sub)) throw std::invalid_argument("restrict_to: not a subgroup of the representation's group");
  std::vector<Matrix> gens;
  for (const Generator& g : sub.generators()) gens.push_back(rho.generator_matrix(g));
  return Representation(sub, rho.dimension(), std::move(gens));
}

Representation clifford_irrep(const CliffordLabel& lambda) {
  const GammaMap gamma = lambda.gamma();
  const Representation inner = tensor_product(extend_to_wreath(lambda.m, gamma), inflate(lambda));
  return induce(inner, WreathShape(lambda.m, lambda.d()));
}

BimoduleModel springer_module(const JordanProfile& profile) {
  const OrbitLabel orbit = orbit_label(profile);
  const std::size_t m = orbit.m;
  const std::size_t d = orbit.d();
  Representation left = induce(base_tensor(m, orbit.types), WreathShape(m, d));

  std::vector<std::size_t> dims;
  for (const Partition& p : orbit.types) dims.push_back(static_cast<std::size_t>(hook_dim(p)));
  const std::size_t k = product_of(dims);
  const std::vector<Permutation> tops = all_permutations(d);
  const std::size_t n = tops.size();

  WreathShape right_shape(1, d, gamma_of(orbit).young_composition());
  std::vector<Matrix> right_gens;
  for (const Generator& g : right_shape.generators()) {
    const Matrix swap = slot_swap(dims, g.index - 1);
    const Permutation c = Permutation::simple(d, g.index);
    Matrix big(n * k, n * k);
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t b = static_cast<std::size_t>(lex_rank(tops[a] * c));
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t col = 0; col < k; ++col) big(b * k + r, a * k + col) = swap(r, col);
    }
    right_gens.push_back(std::move(big));
  }
  Representation right(right_shape, n * k, std::move(right_gens));
  for (const Matrix& l : left.generator_matrices())
    for (const Matrix& r : right.generator_matrices())
      if (!(l * r == r * l)) throw std::logic_error("springer_module: left and right actions do not commute");
  return BimoduleModel{orbit, std::move(left), std::move(right)};
}

Character isotypic_character(const BimoduleModel& module, const CliffordLabel& psi) {
  if (psi.m != module.orbit.m || psi.gamma() != gamma_of(module.orbit))
    throw std::invalid_argument("isotypic_character: " + psi.to_string() + " is not an irreducible of the component group");
  std::vector<Partition> parts;
  for (const auto& [nu, value] : psi.entries) parts.push_back(value);
  const Representation psi_rep = young_specht(1, parts);
  const auto right_ctx = context_for(module.right_group.shape());

  std::vector<Rational> weights;
  std::vector<Matrix> right_images;
  for (const WreathElement& c : right_ctx->elements()) {
    weights.push_back(psi_rep.image(inverse(c)).trace());
    right_images.push_back(module.right_group.image(c));
  }
  const auto ctx = context_for(module.left.shape());
  Character chi{ctx, {}};
  const Rational order(right_ctx->size());
  for (std::size_t rep : ctx->class_representatives()) {
    const Matrix l = module.left.image(ctx->element(rep));
    Rational value(0);
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (!weights[i].is_zero()) value += weights[i] * trace_of_product(l, right_images[i]);
    chi.values.push_back(value / order);
  }
  return chi;
}

CharacterTable character_table(std::size_t m, std::size_t d) {
  CharacterTable table{context_for(WreathShape(m, d)), enumerate_IC(m, d), {}};
  for (const CliffordLabel& label : table.labels) table.rows.push_back(character(table.ctx, clifford_irrep(label)));
  return table;
}

}  // namespace wreath
