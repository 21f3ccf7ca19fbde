#include "semisplit/kreport.hpp"

#include <cctype>

#include "semisplit/error.hpp"
#include "semisplit/vcclass.hpp"

namespace semisplit::kreport {

namespace {

std::string subscript(const std::string& s) { return s.size() == 1 ? "_" + s : "_{" + s + "}"; }

std::string op_name(Expr::Op op) {
  switch (op) {
    case Expr::Op::K: return "K";
    case Expr::Op::Wh: return "Wh";
    case Expr::Op::Nil: return "Nil";
    case Expr::Op::Sum: return "sum";
    case Expr::Op::Quotient: return "quotient";
    case Expr::Op::Frac: return "frac";
    case Expr::Op::IndexedSum: return "indexed_sum";
    case Expr::Op::Power: return "power";
  }
  return "?";
}

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

const Text kR{"R", "R"};
Text group_ring(const std::string& latex, const std::string& unicode) {
  return {"R[" + latex + "]", "R[" + unicode + "]"};
}
const Text kZ2 = group_ring("\\mathbb{Z}_2", "ℤ₂");
const Text kZ3 = group_ring("\\mathbb{Z}_3", "ℤ₃");

}  // namespace

std::string Degree::latex() const {
  if (value) return std::to_string(*value);
  if (offset == 0) return symbol;
  return symbol + (offset > 0 ? "+" : "-") + std::to_string(offset > 0 ? offset : -offset);
}

std::string Degree::unicode() const {
  if (value) return *value < 0 ? "−" + std::to_string(-*value) : std::to_string(*value);
  if (offset == 0) return symbol;
  return symbol + (offset > 0 ? "+" : "−") + std::to_string(offset > 0 ? offset : -offset);
}

std::string Expr::latex() const {
  switch (op) {
    case Op::K: return "K" + subscript(degree.latex()) + "(" + arg.latex + ")";
    case Op::Wh: return "\\mathrm{Wh}(" + arg.latex + ")";
    case Op::Nil: return "\\widetilde{\\mathrm{Nil}}" + subscript(degree.latex()) + "(" + arg.latex + ")";
    case Op::Sum: {
      std::string s;
      for (const auto& c : children) s += (s.empty() ? "" : " \\oplus ") + c->latex();
      return s;
    }
    case Op::Quotient: return "(" + children[0]->latex() + ")/" + children[1]->latex();
    case Op::Frac: return "\\frac{" + children[0]->latex() + "}{" + children[1]->latex() + "}";
    case Op::IndexedSum: return "\\bigoplus_{" + arg.latex + "} " + children[0]->latex();
    case Op::Power: return children[0]->latex() + "^{" + arg.latex + "}";
  }
  return "";
}

std::string Expr::unicode() const {
  switch (op) {
    case Op::K: return "K_" + degree.unicode() + "(" + arg.unicode + ")";
    case Op::Wh: return "Wh(" + arg.unicode + ")";
    case Op::Nil: return "Ñil_" + degree.unicode() + "(" + arg.unicode + ")";
    case Op::Sum: {
      std::string s;
      for (const auto& c : children) s += (s.empty() ? "" : " ⊕ ") + c->unicode();
      return s;
    }
    case Op::Quotient:
    case Op::Frac: return "(" + children[0]->unicode() + ")/" + children[1]->unicode();
    case Op::IndexedSum: return "⨁_" + arg.unicode + " " + children[0]->unicode();
    case Op::Power: return children[0]->unicode() + "^" + arg.unicode;
  }
  return "";
}

nlohmann::json Expr::to_json() const {
  nlohmann::json j{{"op", op_name(op)}};
  if (op == Op::K || op == Op::Nil) j["degree"] = degree.latex();
  if (!arg.latex.empty()) j["arg"] = arg.latex;
  if (!children.empty()) {
    j["children"] = nlohmann::json::array();
    for (const auto& c : children) j["children"].push_back(c->to_json());
  }
  return j;
}

ExprPtr K(Degree d, Text ring) { return make({Expr::Op::K, std::move(d), std::move(ring), {}}); }
ExprPtr Wh(Text group) { return make({Expr::Op::Wh, {}, std::move(group), {}}); }
ExprPtr Nil(Degree d, Text ring) { return make({Expr::Op::Nil, std::move(d), std::move(ring), {}}); }
ExprPtr Sum(std::vector<ExprPtr> terms) { return make({Expr::Op::Sum, {}, {}, std::move(terms)}); }
ExprPtr Quotient(ExprPtr num, ExprPtr den) { return make({Expr::Op::Quotient, {}, {}, {std::move(num), std::move(den)}}); }
ExprPtr Frac(ExprPtr num, ExprPtr den) { return make({Expr::Op::Frac, {}, {}, {std::move(num), std::move(den)}}); }
ExprPtr IndexedSum(Text index, ExprPtr body) { return make({Expr::Op::IndexedSum, {}, std::move(index), {std::move(body)}}); }
ExprPtr Power(ExprPtr body, Text exponent) { return make({Expr::Op::Power, {}, std::move(exponent), {std::move(body)}}); }

std::string Report::latex() const { return lhs->latex() + " " + relation.latex + " " + rhs->latex(); }
std::string Report::unicode() const { return lhs->unicode() + " " + relation.unicode + " " + rhs->unicode(); }

nlohmann::json Report::to_json() const {
  return {{"target", target},
          {"relation", relation.latex},
          {"lhs", lhs->to_json()},
          {"rhs", rhs->to_json()},
          {"latex", latex()},
          {"unicode", unicode()},
          {"index_sets", index_sets}};
}

std::vector<std::string> report_targets() {
  return {"dinfty", "psl2", "intro-dinfty", "intro-psl2", "intro-wh-g0"};
}

Report ktheory_report(const std::string& target, std::optional<int> degree, int enumeration_length) {
  const bool star = target.rfind("intro-", 0) == 0;
  Degree n{star ? "*" : "n", 0, degree};
  const Degree n1 = n.shifted(-1);
  Report r;
  r.target = target;
  if (target == "dinfty") {
    r.lhs = K(n, group_ring("D_\\infty", "D∞"));
    r.relation = {"\\cong", "≅"};
    r.rhs = Sum({Quotient(Sum({K(n, kZ2), K(n, kZ2)}), K(n, kR)), Nil(n1, kR)});
  } else if (target == "psl2") {
    r.lhs = K(n, group_ring("\\Gamma", "Γ"));
    r.relation = {"=", "="};
    r.rhs = Sum({Quotient(Sum({K(n, kZ2), K(n, kZ3)}), K(n, kR)),
                 IndexedSum({"\\mathcal{M}_C", "M_C"}, Sum({Nil(n1, kR), Nil(n1, kR)})),
                 IndexedSum({"\\mathcal{M}_D", "M_D"}, Nil(n1, kR))});
    nlohmann::json mc = nlohmann::json::array(), md = nlohmann::json::array();
    for (const auto& c : psl2::enumerate_maximal_vc(enumeration_length))
      (c.max_vc == psl2::MaxVC::Dihedral ? md : mc).push_back(psl2::print(c.representative));
    r.index_sets = {{"syllable_length", enumeration_length}, {"M_C", mc}, {"M_D", md}};
  } else if (target == "intro-dinfty") {
    r.lhs = K(n, group_ring("\\mathbb{Z}_2 * \\mathbb{Z}_2", "ℤ₂ ∗ ℤ₂"));
    r.relation = {"~=~", "="};
    r.rhs = Sum({Frac(Sum({K(n, kZ2), K(n, kZ2)}), K(n, kR)), Nil(n1, kR)});
  } else if (target == "intro-psl2") {
    r.lhs = K(n, group_ring("\\mathbb{Z}_2 * \\mathbb{Z}_3", "ℤ₂ ∗ ℤ₃"));
    r.relation = {"~=~", "="};
    r.rhs = Sum({Frac(Sum({K(n, kZ2), K(n, kZ3)}), K(n, kR)), Power(Nil(n1, kR), {"\\infty", "∞"})});
  } else if (target == "intro-wh-g0" || target == "FIX-G0") {
    const Text g0z2{"G_0 \\times \\mathbb{Z}_2", "G₀ × ℤ₂"};
    r.lhs = Wh({"G_0 \\times \\mathbb{Z}_2 *_{G_0} G_0 \\times \\mathbb{Z}_2", "G₀ × ℤ₂ ∗_{G₀} G₀ × ℤ₂"});
    r.relation = {"~=~", "="};
    Degree zero{"n", 0, 0};
    r.rhs = Sum({Frac(Sum({Wh(g0z2), Wh(g0z2)}), Wh({"G_0", "G₀"})),
                 Nil(zero, {"\\mathbb{Z}[G_0]", "ℤ[G₀]"})});
  } else {
    r.lhs = K(n, group_ring("G_1 *_F G_2", "G₁ ∗_F G₂"));
    r.relation = {"=", "="};
    r.rhs = Sum({K(n, {"R[F] \\to R[G_1] \\times R[G_2]", "R[F] → R[G₁] × R[G₂]"}),
                 Nil(n1, {"R[F];R[G_1-F],R[G_2-F]", "R[F]; R[G₁−F], R[G₂−F]"})});
  }
  return r;
}

std::string normalize_latex(const std::string& s) {
  std::string out;
  bool in_control_word = false;
  bool pending_space = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '\\' && i + 1 < s.size() && s[i + 1] == '\\') {
      ++i;
      pending_space = true;
      in_control_word = false;
      continue;
    }
    if (c == '&') continue;
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = true;
      continue;
    }
    if (pending_space && in_control_word && std::isalpha(static_cast<unsigned char>(c))) out += ' ';
    pending_space = false;
    if (c == '\\') {
      in_control_word = true;
    } else if (!std::isalpha(static_cast<unsigned char>(c))) {
      in_control_word = false;
    }
    out += c;
  }
  return out;
}

}  // namespace semisplit::kreport
