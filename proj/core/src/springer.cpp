#include "wreath/springer.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <stdexcept>

#include "wreath/orbit.hpp"
#include "wreath/representation.hpp"

namespace wreath {

SpringerLabel psi(const CliffordLabel& lambda) {
  if (lambda.entries.empty()) throw std::invalid_argument("psi: empty Clifford label");
  const CliffordLabel checked = CliffordLabel::make(lambda.m, lambda.entries);
  OrbitLabel orbit{checked.m, {}};
  for (const auto& [nu, value] : checked.entries)
    orbit.types.insert(orbit.types.end(), static_cast<std::size_t>(value.size()), nu);
  std::sort(orbit.types.begin(), orbit.types.end(), canonical_before);
  return SpringerLabel{std::move(orbit), checked};
}

CliffordLabel psi_inv(const SpringerLabel& label) {
  if (label.psi.m != label.orbit.m || label.psi.gamma() != gamma_of(label.orbit))
    throw std::invalid_argument("psi_inv: " + label.to_string() + " is not in I^S");
  return label.psi;
}

bool SpringerReport::passed() const {
  return bijective && dimensions_add_up && ic_count == is_count && is_count == class_count &&
         std::all_of(checks.begin(), checks.end(), [](const SpringerCheck& c) { return c.characters_match; });
}

namespace {

struct OrbitOutcome {
  std::vector<SpringerCheck> checks;
  bool dimensions_add_up = true;
};

OrbitOutcome check_orbit(const OrbitLabel& orbit, const std::shared_ptr<const GroupContext>& ctx) {
  OrbitOutcome out;
  const BimoduleModel module = springer_module(profile_of(orbit));
  Rational total(0);
  for (const CliffordLabel& label : labels_with_gamma(orbit.m, gamma_of(orbit))) {
    const SpringerLabel s{orbit, label};
    const Character iso = isotypic_character(module, label);
    const Character cl = character(ctx, clifford_irrep(psi_inv(s)));
    std::uint64_t psi_dim = 1;
    for (const auto& [nu, value] : label.entries) psi_dim *= hook_dim(value);
    total += Rational(psi_dim) * iso.dimension();
    out.checks.push_back(SpringerCheck{s, iso == cl, iso.dimension(), cl.dimension()});
  }
  out.dimensions_add_up = total == Rational(module.dimension());
  return out;
}

}  // namespace

SpringerReport verify_springer(std::size_t m, std::size_t d) {
  SpringerReport report;
  report.m = m;
  report.d = d;
  const auto ctx = context_for(WreathShape(m, d));
  const std::vector<CliffordLabel> ic = enumerate_IC(m, d);
  const std::vector<SpringerLabel> is = enumerate_IS(m, d);
  report.ic_count = ic.size();
  report.is_count = is.size();
  report.class_count = ctx->conjugacy_classes().size();

  std::set<SpringerLabel> image;
  for (const CliffordLabel& l : ic) image.insert(psi(l));
  report.bijective = image.size() == ic.size() && std::set<SpringerLabel>(is.begin(), is.end()) == image;

  std::vector<std::future<OrbitOutcome>> jobs;
  for (const OrbitLabel& orbit : enumerate_orbits(m, d))
    jobs.push_back(std::async(std::launch::async, check_orbit, orbit, ctx));
  report.dimensions_add_up = true;
  for (auto& job : jobs) {
    OrbitOutcome o = job.get();
    report.dimensions_add_up = report.dimensions_add_up && o.dimensions_add_up;
    for (auto& c : o.checks) report.checks.push_back(std::move(c));
  }
  return report;
}

std::vector<TypeBRow> typeB_table(std::size_t d) {
  const Partition two{2};
  const Partition one_one{1, 1};
  std::vector<TypeBRow> rows;
  for (const CliffordLabel& label : enumerate_IC(2, d))
    rows.push_back(TypeBRow{label.at(two), label.at(one_one), label, psi(label)});
  return rows;
}

std::string to_string(HuSign s) {
  switch (s) {
    case HuSign::kPlus:
      return "+";
    case HuSign::kMinus:
      return "-";
    case HuSign::kNone:
      break;
  }
  return "";
}

namespace {

// Larger size first, then canonical order.
bool pair_before(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return canonical_before(a, b);
}

std::string bracket(const Partition& p) { return "(" + (p.empty() ? std::string() : p.to_string()) + ")"; }

}  // namespace

HuLabel HuLabel::make(Partition a, Partition b, HuSign sign) {
  if ((a == b) != (sign != HuSign::kNone))
    throw std::invalid_argument("Hu label: a sign is required exactly for equal partitions");
  if (pair_before(b, a)) std::swap(a, b);
  return HuLabel{std::move(a), std::move(b), sign};
}

std::string HuLabel::to_string() const {
  return "[" + bracket(first) + "," + bracket(second) + "]" + wreath::to_string(sign);
}

HuLabel hu_of(const CliffordLabel& lambda) {
  if (lambda.d() != 2) throw std::invalid_argument("hu_of: label is not in I^C(m, 2)");
  if (lambda.entries.size() == 2)
    return HuLabel::make(lambda.entries[0].first, lambda.entries[1].first, HuSign::kNone);
  const auto& [nu, value] = lambda.entries.front();
  return HuLabel::make(nu, nu, value == Partition{2} ? HuSign::kPlus : HuSign::kMinus);
}

CliffordLabel clifford_of(const HuLabel& label, std::size_t m) {
  if (label.sign == HuSign::kNone)
    return CliffordLabel::make(m, {{label.first, Partition{1}}, {label.second, Partition{1}}});
  return CliffordLabel::make(m, {{label.first, label.sign == HuSign::kPlus ? Partition{2} : Partition{1, 1}}});
}

std::vector<HuLabel> hu_index(std::size_t m) {
  std::vector<HuLabel> out;
  for (const CliffordLabel& label : enumerate_IC(m, 2)) out.push_back(hu_of(label));
  return out;
}

std::vector<TypeDRow> typeD_table(std::size_t d) {
  std::vector<TypeDRow> rows;
  std::set<std::pair<Partition, Partition>> seen;
  for (std::size_t a = d + 1; a-- > 0;) {
    for (const Partition& first : partitions_of(static_cast<int>(a)))
      for (const Partition& second : partitions_of(static_cast<int>(d - a))) {
        if (first == second) continue;
        HuLabel label = HuLabel::make(first, second, HuSign::kNone);
        if (!seen.emplace(label.first, label.second).second) continue;
        rows.push_back(TypeDRow{label, label.first, label.second, Partition{1}});
      }
  }
  if (d % 2 == 0)
    for (const Partition& nu : partitions_of(static_cast<int>(d / 2)))
      for (HuSign sign : {HuSign::kPlus, HuSign::kMinus})
        rows.push_back(TypeDRow{HuLabel::make(nu, nu, sign), nu, nu,
                                sign == HuSign::kPlus ? Partition{2} : Partition{1, 1}});
  return rows;
}

}  // namespace wreath
