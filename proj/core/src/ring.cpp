#include "semisplit/ring.hpp"

#include "semisplit/error.hpp"

namespace semisplit {

std::string to_string(RingKind k) {
  switch (k) {
    case RingKind::GroupRingF: return "R[F]";
    case RingKind::PolyPlus: return "R[F]_a[t]";
    case RingKind::PolyMinus: return "R[F]_a-1[t-1]";
    case RingKind::Laurent: return "R[F]_a[t,t-1]";
    case RingKind::PolyPlusPrime: return "R[F]_a'[t']";
    case RingKind::PolyMinusPrime: return "R[F]_a'-1[t'-1]";
    case RingKind::LaurentPrime: return "R[F]_a'[t',t'-1]";
    case RingKind::GroupRingG: return "R[G]";
  }
  return "?";
}

RingKind parse_ring_kind(const std::string& s) {
  for (RingKind k : {RingKind::GroupRingF, RingKind::PolyPlus, RingKind::PolyMinus, RingKind::Laurent,
                     RingKind::PolyPlusPrime, RingKind::PolyMinusPrime, RingKind::LaurentPrime, RingKind::GroupRingG})
    if (to_string(k) == s) return k;
  throw ParseError("unknown ring '" + s + "'");
}

bool is_primed(RingKind k) {
  return k == RingKind::PolyPlusPrime || k == RingKind::PolyMinusPrime || k == RingKind::LaurentPrime;
}

bool is_twisted(RingKind k) { return k != RingKind::GroupRingF && k != RingKind::GroupRingG; }

void require_same_tag(const RingTag& a, const RingTag& b, const char* where) {
  if (!(a == b))
    throw TagMismatch(std::string(where) + ": " + to_string(a.kind) + " vs " + to_string(b.kind) +
                      (a.coeff == b.coeff ? "" : " (coefficients differ)") +
                      (a.amalgam.get() == b.amalgam.get() ? "" : " (amalgams differ)"));
}

RingElem RingElem::scalar(const RingTag& tag, std::int64_t c) { return monomial(tag, {}, c); }

RingElem RingElem::monomial(const RingTag& tag, const Monomial& m, std::int64_t c) {
  RingElem r(tag);
  r.add_term(m, c);
  return r;
}

RingElem RingElem::element(const RingTag& tag, const FElem& f, std::int64_t c) {
  return monomial(tag, Monomial{0, GroupWord{{}, f}}, c);
}

RingElem RingElem::t_power(const RingTag& tag, std::int64_t n) {
  if (!is_twisted(tag.kind)) throw TagMismatch("t only exists in twisted rings");
  const bool plus = tag.kind == RingKind::PolyPlus || tag.kind == RingKind::PolyPlusPrime;
  const bool minus = tag.kind == RingKind::PolyMinus || tag.kind == RingKind::PolyMinusPrime;
  if ((plus && n < 0) || (minus && n > 0))
    throw InvalidInclusionPair("t^" + std::to_string(n) + " does not lie in " + to_string(tag.kind));
  return monomial(tag, Monomial{n, {}}, 1);
}

RingElem RingElem::word(const RingTag& tag, const GroupWord& w, std::int64_t c) {
  if (tag.kind != RingKind::GroupRingG && !w.letters.empty())
    throw TagMismatch("letters only exist in R[G]");
  return monomial(tag, Monomial{0, w}, c);
}

std::int64_t RingElem::coeff_of(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void RingElem::add_term(const Monomial& m, std::int64_t c) {
  c = tag_.coeff.normalize(c);
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = tag_.coeff.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

RingElem RingElem::operator-() const {
  RingElem r(tag_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, tag_.coeff.neg(c));
  return r;
}

RingElem operator+(const RingElem& a, const RingElem& b) {
  RingElem r = a;
  r += b;
  return r;
}

RingElem operator-(const RingElem& a, const RingElem& b) {
  RingElem r = a;
  r -= b;
  return r;
}

RingElem& RingElem::operator+=(const RingElem& b) {
  require_same_tag(tag_, b.tag_, "add");
  for (const auto& [m, c] : b.terms_) add_term(m, c);
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& b) {
  require_same_tag(tag_, b.tag_, "sub");
  for (const auto& [m, c] : b.terms_) add_term(m, tag_.coeff.neg(c));
  return *this;
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  require_same_tag(a.tag_, b.tag_, "mul");
  const RingTag& tag = a.tag_;
  const Amalgam& G = *tag.amalgam;
  const BaseGroup& F = G.F();
  const CoeffRing& R = tag.coeff;
  RingElem r(tag);
  if (a.is_zero() || b.is_zero()) return r;
  switch (tag.kind) {
    case RingKind::GroupRingF:
      for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
          r.add_term(Monomial{0, {{}, F.mul(ma.word.tail, mb.word.tail)}}, R.mul(ca, cb));
      break;
    case RingKind::GroupRingG:
      for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(Monomial{0, G.mul(ma.word, mb.word)}, R.mul(ca, cb));
      break;
    default: {
      // (t^a x)(t^b y) = t^{a+b} tw^b(x) y
      const bool primed = is_primed(tag.kind);
      for (const auto& [mb, cb] : b.terms_)
        for (const auto& [ma, ca] : a.terms_) {
          const FElem x = primed ? G.alpha_prime_pow(mb.power, ma.word.tail) : G.alpha_pow(mb.power, ma.word.tail);
          r.add_term(Monomial{ma.power + mb.power, {{}, F.mul(x, mb.word.tail)}}, R.mul(ca, cb));
        }
      break;
    }
  }
  return r;
}

RingElem RingElem::retag(RingKind k) const {
  if (k == tag_.kind) return *this;
  const bool family_change = is_twisted(k) && is_twisted(tag_.kind) && is_primed(k) != is_primed(tag_.kind);
  for (const auto& [m, c] : terms_) {
    const bool has_letters = !m.word.letters.empty();
    bool ok = true;
    switch (k) {
      case RingKind::GroupRingF: ok = m.power == 0 && !has_letters; break;
      case RingKind::GroupRingG: ok = m.power == 0; break;
      case RingKind::PolyPlus:
      case RingKind::PolyPlusPrime: ok = m.power >= 0 && !has_letters; break;
      case RingKind::PolyMinus:
      case RingKind::PolyMinusPrime: ok = m.power <= 0 && !has_letters; break;
      case RingKind::Laurent:
      case RingKind::LaurentPrime: ok = !has_letters; break;
    }
    if (family_change && m.power != 0) ok = false;
    if (!ok)
      throw InvalidInclusionPair("element of " + to_string(tag_.kind) + " does not lie in " + to_string(k));
  }
  RingElem r = *this;
  r.tag_.kind = k;
  return r;
}

RingElem RingElem::twisted(const GroupAut& a) const {
  RingElem r(tag_);
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    n.word.tail = a.apply(m.word.tail);
    r.add_term(n, c);
  }
  return r;
}

RingElem RingElem::left_mul(const FElem& f) const { return element(tag_, f) * *this; }

namespace {

void require_kind(const RingElem& x, RingKind k, const char* what) {
  if (x.tag().kind != k)
    throw InvalidInclusionPair(std::string(what) + " expects " + to_string(k) + ", got " + to_string(x.tag().kind));
}

RingElem theta_impl(const RingElem& x, bool primed) {
  const Amalgam& G = *x.tag().amalgam;
  const RingTag target = x.tag().with_kind(RingKind::GroupRingG);
  const GroupWord gen = primed ? G.t_prime() : G.t();
  const GroupWord gen_inv = G.inverse(gen);
  std::map<std::int64_t, GroupWord> powers{{0, G.identity()}};
  auto power = [&](std::int64_t n) -> GroupWord {
    auto it = powers.find(n);
    if (it != powers.end()) return it->second;
    std::int64_t k = 0;
    GroupWord w = G.identity();
    for (const auto& [e, word] : powers)
      if ((n > 0 && e > k && e < n) || (n < 0 && e < k && e > n)) {
        k = e;
        w = word;
      }
    while (k != n) {
      k += n > 0 ? 1 : -1;
      w = G.mul(w, n > 0 ? gen : gen_inv);
      powers.emplace(k, w);
    }
    return w;
  };
  RingElem r(target);
  for (const auto& [m, c] : x.terms()) {
    GroupWord w = power(m.power);
    w.tail = G.F().mul(w.tail, m.word.tail);
    r.add_term(Monomial{0, w}, c);
  }
  return r;
}

}  // namespace

RingElem embed(const RingElem& x, Inclusion inc, RingKind target) {
  switch (inc) {
    case Inclusion::FromF:
      require_kind(x, RingKind::GroupRingF, "inclusion of R[F]");
      return x.retag(target);
    case Inclusion::PsiPlus:
      require_kind(x, RingKind::PolyPlus, "psi+");
      return x.retag(RingKind::Laurent);
    case Inclusion::PsiMinus:
      require_kind(x, RingKind::PolyMinus, "psi-");
      return x.retag(RingKind::Laurent);
    case Inclusion::PsiPlusPrime:
      require_kind(x, RingKind::PolyPlusPrime, "psi'+");
      return x.retag(RingKind::LaurentPrime);
    case Inclusion::PsiMinusPrime:
      require_kind(x, RingKind::PolyMinusPrime, "psi'-");
      return x.retag(RingKind::LaurentPrime);
    case Inclusion::Theta:
      require_kind(x, RingKind::Laurent, "theta");
      return theta_impl(x, false);
    case Inclusion::ThetaPrime:
      require_kind(x, RingKind::LaurentPrime, "theta'");
      return theta_impl(x, true);
    case Inclusion::Phi:
      require_kind(x, RingKind::PolyPlus, "phi");
      return theta_impl(x, false);
    case Inclusion::PhiPrime:
      require_kind(x, RingKind::PolyPlusPrime, "phi'");
      return theta_impl(x, true);
  }
  throw InvalidInclusionPair("unknown inclusion");
}

RingElem restrict_to_bar(const RingElem& x, bool primed) {
  require_kind(x, RingKind::GroupRingG, "restriction");
  const Amalgam& G = *x.tag().amalgam;
  RingElem r(x.tag().with_kind(RingKind::Laurent));
  for (const auto& [m, c] : x.terms()) {
    const BarElement b = G.bar_convert(m.word);
    r.add_term(Monomial{b.n, {{}, b.f}}, c);
  }
  return primed ? beta_u(r) : r;
}

namespace {

RingElem power_of(const RingElem& base, std::int64_t n, const RingTag& tag) {
  RingElem r = RingElem::scalar(tag, 1);
  for (; n > 0; --n) r = r * base;
  return r;
}

RingElem substitute_t(const RingElem& x, const RingTag& target, const RingElem& img_t, const RingElem& img_tinv) {
  RingElem r(target);
  for (const auto& [m, c] : x.terms()) {
    RingElem term = power_of(m.power >= 0 ? img_t : img_tinv, m.power >= 0 ? m.power : -m.power, target);
    r += term * RingElem::element(target, m.word.tail, c);
  }
  return r;
}

}  // namespace

RingElem beta_u(const RingElem& x) {
  RingKind out;
  switch (x.tag().kind) {
    case RingKind::GroupRingF: return x;
    case RingKind::PolyMinus: out = RingKind::PolyPlusPrime; break;
    case RingKind::PolyPlus: out = RingKind::PolyMinusPrime; break;
    case RingKind::Laurent: out = RingKind::LaurentPrime; break;
    default: throw InvalidInclusionPair("beta_u is defined on unprimed twisted rings, got " + to_string(x.tag().kind));
  }
  const Amalgam& G = *x.tag().amalgam;
  const RingTag lp = x.tag().with_kind(RingKind::LaurentPrime);
  const FElem u = G.u();
  const RingElem img_t = RingElem::element(lp, G.F().inv(u)) * RingElem::t_power(lp, -1);
  const RingElem img_tinv = RingElem::t_power(lp, 1) * RingElem::element(lp, u);
  return substitute_t(x, lp, img_t, img_tinv).retag(out);
}

RingElem beta_u_inverse(const RingElem& x) {
  RingKind out;
  switch (x.tag().kind) {
    case RingKind::GroupRingF: return x;
    case RingKind::PolyPlusPrime: out = RingKind::PolyMinus; break;
    case RingKind::PolyMinusPrime: out = RingKind::PolyPlus; break;
    case RingKind::LaurentPrime: out = RingKind::Laurent; break;
    default: throw InvalidInclusionPair("beta_u^-1 is defined on primed rings, got " + to_string(x.tag().kind));
  }
  const Amalgam& G = *x.tag().amalgam;
  const RingTag l = x.tag().with_kind(RingKind::Laurent);
  const FElem u = G.u();
  // t' -> t^-1 u^-1, t'^-1 -> u t
  const RingElem img_t = RingElem::t_power(l, -1) * RingElem::element(l, G.F().inv(u));
  const RingElem img_tinv = RingElem::element(l, u) * RingElem::t_power(l, 1);
  return substitute_t(x, l, img_t, img_tinv).retag(out);
}

RingElem tensor_identify(const BimoduleElem& b1, const BimoduleElem& b2) {
  if (b1.side != 1 || b2.side != 2) throw TagMismatch("tensor_identify expects B1 (x) B2");
  require_kind(b1.payload, RingKind::GroupRingF, "tensor_identify");
  require_kind(b2.payload, RingKind::GroupRingF, "tensor_identify");
  const Amalgam& G = *b1.payload.tag().amalgam;
  const RingElem prod = b1.payload.twisted(G.alpha_letter(2)) * b2.payload;
  const RingTag l = prod.tag().with_kind(RingKind::Laurent);
  return RingElem::t_power(l, 1) * prod.retag(RingKind::Laurent);
}

RingElem tensor_identify_prime(const BimoduleElem& b2, const BimoduleElem& b1) {
  if (b2.side != 2 || b1.side != 1) throw TagMismatch("tensor_identify_prime expects B2 (x) B1");
  require_kind(b1.payload, RingKind::GroupRingF, "tensor_identify_prime");
  require_kind(b2.payload, RingKind::GroupRingF, "tensor_identify_prime");
  const Amalgam& G = *b1.payload.tag().amalgam;
  const RingElem prod = b2.payload.twisted(G.alpha_letter(1)) * b1.payload;
  const RingTag l = prod.tag().with_kind(RingKind::LaurentPrime);
  return RingElem::t_power(l, 1) * prod.retag(RingKind::LaurentPrime);
}

RingElem bimodule_to_group_ring(const BimoduleElem& b) {
  require_kind(b.payload, RingKind::GroupRingF, "bimodule element");
  const Amalgam& G = *b.payload.tag().amalgam;
  RingElem r(b.payload.tag().with_kind(RingKind::GroupRingG));
  for (const auto& [m, c] : b.payload.terms()) {
    GroupWord w = G.letter(b.side);
    w.tail = m.word.tail;
    r.add_term(Monomial{0, w}, c);
  }
  return r;
}

}  // namespace semisplit
