#include "semisplit/amalgam.hpp"

#include "semisplit/error.hpp"

namespace semisplit {

namespace {

std::string show(const FElem& f) { return "f" + std::to_string(f.idx); }

std::vector<FElem> test_elements(const BaseGroup& F) {
  std::vector<FElem> xs = F.finite_elements();
  for (int k = 0; k < F.free_rank(); ++k) xs.push_back(F.lattice_generator(k));
  return xs;
}

}  // namespace

std::shared_ptr<const Amalgam> Amalgam::create(Spec spec) {
  const BaseGroup& F = spec.F;
  for (int i : {1, 2}) {
    const GroupAut& a = i == 1 ? spec.alpha1 : spec.alpha2;
    const FElem& s = i == 1 ? spec.s1 : spec.s2;
    if (static_cast<int>(a.perm().size()) != F.finite_order())
      throw NotAnAutomorphism("alpha" + std::to_string(i) + " has the wrong size");
    if (a.apply(s) != s)
      throw FixedPointFails("alpha" + std::to_string(i) + "(s" + std::to_string(i) + ") != s" +
                            std::to_string(i));
    const FElem si = F.inv(s);
    for (const FElem& x : test_elements(F))
      if (a.apply(a.apply(x)) != F.mul(F.mul(si, x), s))
        throw SquareRelationFails("alpha" + std::to_string(i) + "^2 differs from conjugation by s" +
                                  std::to_string(i) + " at " + show(x));
    const std::optional<int>& declared = i == 1 ? spec.t1_order : spec.t2_order;
    if (declared) {
      const int so = F.element_order(s);
      if (so == 0 || *declared != 2 * so)
        throw SquareRelationFails("T" + std::to_string(i) + " declared of order " +
                                  std::to_string(*declared) + " but T" + std::to_string(i) +
                                  "^2 = s" + std::to_string(i) + " has order " + std::to_string(so));
    }
  }
  for (const auto& [nm, idx] : spec.names)
    if (idx < 0 || idx >= F.finite_order()) throw ParseError("name '" + nm + "' out of range");

  std::shared_ptr<Amalgam> g(new Amalgam(std::move(spec)));
  g->alpha1_inv_ = g->spec_.alpha1.inverse();
  g->alpha2_inv_ = g->spec_.alpha2.inverse();
  g->alpha_ = g->spec_.alpha2.compose(g->spec_.alpha1);
  g->alpha_inv_ = g->alpha_.inverse();
  g->alpha_prime_ = g->spec_.alpha1.compose(g->spec_.alpha2);
  g->alpha_prime_inv_ = g->alpha_prime_.inverse();

  const GroupWord u = g->inverse(g->mul(g->t(), g->t_prime()));
  if (!u.letters.empty()) throw InternalInconsistency("u = (t t')^{-1} has letters after rewriting");
  g->u_ = u.tail;
  const BaseGroup& H = g->spec_.F;
  const FElem ui = H.inv(g->u_);
  for (const FElem& x : test_elements(H))
    if (g->alpha_prime_.apply(x) != H.mul(H.mul(g->u_, g->alpha_inv_.apply(x)), ui))
      throw InternalInconsistency("alpha'(x) != u alpha^{-1}(x) u^{-1} at " + show(x));
  return g;
}

GroupWord Amalgam::letter(int i) const {
  GroupWord w;
  w.letters.push_back(static_cast<std::uint8_t>(i));
  return w;
}

void Amalgam::append_letter(GroupWord& w, int i) const {
  // L f T_i = L T_i alpha_i(f); a repeated letter collapses to s_i.
  const FElem f = alpha_letter(i).apply(w.tail);
  if (!w.letters.empty() && w.letters.back() == i) {
    w.letters.pop_back();
    w.tail = spec_.F.mul(s(i), f);
  } else {
    w.letters.push_back(static_cast<std::uint8_t>(i));
    w.tail = f;
  }
}

void Amalgam::append(GroupWord& w, const RawToken& tok) const {
  if (tok.kind == RawToken::Kind::Element) {
    w.tail = spec_.F.mul(w.tail, tok.f);
    return;
  }
  if (tok.letter != 1 && tok.letter != 2) throw ParseError("letter must be T1 or T2");
  std::int64_t e = tok.exponent;
  // T_i^{-1} = T_i s_i^{-1}
  const FElem si = spec_.F.inv(s(tok.letter));
  for (; e > 0; --e) append_letter(w, tok.letter);
  for (; e < 0; ++e) {
    append_letter(w, tok.letter);
    w.tail = spec_.F.mul(w.tail, si);
  }
}

GroupWord Amalgam::mul(const GroupWord& a, const GroupWord& b) const {
  GroupWord w = a;
  for (std::uint8_t l : b.letters) append_letter(w, l);
  w.tail = spec_.F.mul(w.tail, b.tail);
  return w;
}

GroupWord Amalgam::inverse(const GroupWord& a) const {
  GroupWord w = element(spec_.F.inv(a.tail));
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) append(w, RawToken::t(*it, -1));
  return w;
}

GroupWord Amalgam::power(const GroupWord& a, std::int64_t n) const {
  const GroupWord base = n >= 0 ? a : inverse(a);
  GroupWord w;
  for (std::int64_t k = n >= 0 ? n : -n; k > 0; --k) w = mul(w, base);
  return w;
}

GroupWord Amalgam::normal_form(std::span<const RawToken> tokens) const {
  GroupWord w;
  for (const RawToken& tok : tokens) append(w, tok);
  return w;
}

GroupWord Amalgam::t() const { return mul(letter(1), letter(2)); }
GroupWord Amalgam::t_prime() const { return mul(letter(2), letter(1)); }

BarElement Amalgam::bar_convert(const GroupWord& w) const {
  if (w.letters.size() % 2 != 0) throw NotInBarSubgroup("word has odd letter length");
  const auto k = static_cast<std::int64_t>(w.letters.size() / 2);
  if (k == 0 || w.letters.front() == 1) return {k, w.tail};
  // (T2 T1)^k f = t^{-k} c^{-1} f where t^{-k} = (T2 T1)^k c.
  const GroupWord tk = power(t(), -k);
  return {-k, spec_.F.mul(spec_.F.inv(tk.tail), w.tail)};
}

GroupWord Amalgam::from_bar(const BarElement& b) const {
  GroupWord w = power(t(), b.n);
  w.tail = spec_.F.mul(w.tail, b.f);
  return w;
}

FElem Amalgam::alpha_pow(std::int64_t n, const FElem& x) const {
  FElem y = x;
  for (; n > 0; --n) y = alpha_.apply(y);
  for (; n < 0; ++n) y = alpha_inv_.apply(y);
  return y;
}

FElem Amalgam::alpha_prime_pow(std::int64_t n, const FElem& x) const {
  FElem y = x;
  for (; n > 0; --n) y = alpha_prime_.apply(y);
  for (; n < 0; ++n) y = alpha_prime_inv_.apply(y);
  return y;
}

BarElement Amalgam::bar_mul(const BarElement& a, const BarElement& b) const {
  // (t^n x)(t^m y) = t^{n+m} alpha^m(x) y
  return {a.n + b.n, spec_.F.mul(alpha_pow(b.n, a.f), b.f)};
}

DinftyElem Amalgam::project(const GroupWord& w) const {
  DinftyElem p;
  for (std::uint8_t l : w.letters) p = p * (l == 1 ? DinftyElem{0, 1} : DinftyElem{-1, 1});
  return p;
}

}  // namespace semisplit
