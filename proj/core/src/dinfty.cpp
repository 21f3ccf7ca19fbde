#include <numeric>
#include <queue>

#include "semisplit/vcclass.hpp"

namespace semisplit {

std::string to_string(VCKind k) {
  switch (k) {
    case VCKind::Finite: return "Finite";
    case VCKind::FiniteByCyclic: return "FiniteByCyclic";
    case VCKind::DihedralType: return "DihedralType";
  }
  return "?";
}

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

}  // namespace

bool DinftySubgroup::contains(const DinftyElem& g) const {
  if (g.flip == 0) return translation == 0 ? g.n == 0 : g.n % translation == 0;
  if (!reflection) return false;
  if (translation == 0) return g.n == *reflection;
  return floor_mod(g.n - *reflection, translation) == 0;
}

nlohmann::json DinftySubgroup::to_json() const {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : generators) gens.push_back({g.n, g.flip});
  nlohmann::json j{{"generators", gens}, {"type", to_string(kind)}, {"translation", translation}};
  j["reflection"] = reflection ? nlohmann::json(*reflection) : nlohmann::json(nullptr);
  if (kind == VCKind::Finite) j["order"] = finite_order;
  return j;
}

DinftySubgroup classify_dinfty_subgroup(const std::vector<DinftyElem>& gens) {
  DinftySubgroup s;
  s.generators = gens;
  std::int64_t d = 0;
  std::optional<std::int64_t> r0;
  for (const DinftyElem& g : gens) {
    if (g.flip == 0) {
      d = std::gcd(d, g.n);
    } else if (!r0) {
      r0 = g.n;
    } else {
      // (r, 1)(r0, 1) = (r - r0, 0)
      d = std::gcd(d, g.n - *r0);
    }
  }
  s.translation = d;
  if (r0) s.reflection = d > 0 ? floor_mod(*r0, d) : *r0;
  if (d == 0) {
    s.kind = VCKind::Finite;
    s.finite_order = r0 ? 2 : 1;
  } else {
    s.kind = r0 ? VCKind::DihedralType : VCKind::FiniteByCyclic;
  }
  return s;
}

bool family_membership(const DinftySubgroup& s, Family f) {
  switch (f) {
    case Family::Fin: return s.kind == VCKind::Finite;
    case Family::Fbc: return s.kind != VCKind::DihedralType;
    case Family::Vc: return true;
  }
  return false;
}

std::set<DinftyElem> dinfty_ball_closure(const std::vector<DinftyElem>& gens, std::int64_t radius) {
  std::vector<DinftyElem> steps;
  for (const auto& g : gens) {
    steps.push_back(g);
    steps.push_back(g.inverse());
  }
  std::set<DinftyElem> seen{DinftyElem{}};
  std::queue<DinftyElem> todo;
  todo.push(DinftyElem{});
  while (!todo.empty()) {
    DinftyElem x = todo.front();
    todo.pop();
    for (const auto& s : steps) {
      DinftyElem y = x * s;
      if (y.n > radius || y.n < -radius) continue;
      if (seen.insert(y).second) todo.push(y);
    }
  }
  return seen;
}

}  // namespace semisplit
