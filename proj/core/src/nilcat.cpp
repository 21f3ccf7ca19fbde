#include "semisplit/nilcat.hpp"

#include "semisplit/error.hpp"
#include "semisplit/literal.hpp"

namespace semisplit {

namespace {

const Amalgam& amalgam_of(const RingMatrix& m) { return *m.tag().amalgam; }

void require_base(const RingMatrix& m, const char* where) {
  if (m.tag().kind != RingKind::GroupRingF)
    throw TagMismatch(std::string(where) + ": Nil data must be matrices over R[F]");
}

void require_shape(const NilA& x, const char* where) {
  require_base(x.M1, where);
  require_base(x.M2, where);
  require_same_tag(x.M1.tag(), x.M2.tag(), where);
  if (x.M1.cols() != x.M2.rows() || x.M2.cols() != x.M1.rows())
    throw ShapeMismatch(std::string(where) + ": expected M1 n1 x n2 and M2 n2 x n1");
}

void require_twist(const NilB& y, Twist expected, const char* where) {
  require_base(y.M, where);
  if (!y.M.is_square()) throw NonSquare(where);
  if (y.twist != expected)
    throw TwistMismatch(std::string(where) + ": expected twist " + to_string(expected) + ", got " +
                        to_string(y.twist));
}

Twist order_twist(Order o) { return o == Order::B1B2 ? Twist::Alpha : Twist::AlphaPrime; }

}  // namespace

std::string to_string(Twist t) {
  switch (t) {
    case Twist::Alpha: return "alpha";
    case Twist::AlphaInv: return "alpha^-1";
    case Twist::AlphaPrime: return "alpha'";
    case Twist::AlphaPrimeInv: return "alpha'^-1";
  }
  return "?";
}

Twist parse_twist(const std::string& s) {
  for (Twist t : {Twist::Alpha, Twist::AlphaInv, Twist::AlphaPrime, Twist::AlphaPrimeInv})
    if (to_string(t) == s) return t;
  throw ParseError("unknown twist '" + s + "'");
}

const GroupAut& twist_aut(const Amalgam& G, Twist t) {
  switch (t) {
    case Twist::Alpha: return G.alpha();
    case Twist::AlphaInv: return G.alpha_inv();
    case Twist::AlphaPrime: return G.alpha_prime();
    case Twist::AlphaPrimeInv: return G.alpha_prime_inv();
  }
  throw InternalInconsistency("twist");
}

RingKind twist_ring(Twist t) {
  switch (t) {
    case Twist::Alpha: return RingKind::PolyPlus;
    case Twist::AlphaInv: return RingKind::PolyMinus;
    case Twist::AlphaPrime: return RingKind::PolyPlusPrime;
    case Twist::AlphaPrimeInv: return RingKind::PolyMinusPrime;
  }
  throw InternalInconsistency("twist");
}

std::int64_t twist_exponent(Twist t) {
  return (t == Twist::Alpha || t == Twist::AlphaPrime) ? 1 : -1;
}

NilA make_nilA(Order order, RingMatrix M1, RingMatrix M2) {
  NilA x{order, std::move(M1), std::move(M2)};
  require_shape(x, "make_nilA");
  return x;
}

RingMatrix twisted_power(const RingMatrix& M, const GroupAut& tw, int k) {
  if (!M.is_square()) throw NonSquare("twisted_power");
  if (k < 0) throw ShapeMismatch("twisted_power: negative exponent");
  RingMatrix acc = RingMatrix::identity(M.tag(), M.rows());
  RingMatrix factor = M;
  for (int i = 0; i < k; ++i) {
    acc = factor * acc;
    factor = factor.twisted(tw);
  }
  return acc;
}

NilpotencyResult nilpotency_check(const NilB& y, int kmax) {
  require_base(y.M, "nilpotency_check");
  if (!y.M.is_square()) throw NonSquare("nilpotency_check");
  const GroupAut& tw = twist_aut(amalgam_of(y.M), y.twist);
  NilpotencyResult r;
  if (y.M.rows() == 0) {
    r.nilpotent = true;
    r.degree = 0;
    return r;
  }
  RingMatrix acc = RingMatrix::identity(y.M.tag(), y.M.rows());
  RingMatrix factor = y.M;
  for (int d = 1; d <= kmax; ++d) {
    acc = factor * acc;
    if (acc.is_zero()) {
      r.nilpotent = true;
      r.degree = d;
      return r;
    }
    factor = factor.twisted(tw);
  }
  r.witness = acc;
  return r;
}

bool NilAPairResult::certified() const {
  if (!composite.nilpotent || !composite_prime.nilpotent) return false;
  int gap = composite.degree - composite_prime.degree;
  return gap >= -1 && gap <= 1;
}

NilAPairResult nilpotency_check(const NilA& x, int kmax) {
  return {nilpotency_check(composite(x), kmax), nilpotency_check(composite_prime(x), kmax)};
}

int require_nilpotent(const NilB& y, int kmax) {
  NilpotencyResult r = nilpotency_check(y, kmax);
  if (!r.nilpotent)
    throw NotNilpotentWithinBound("no vanishing twisted power up to " + std::to_string(kmax) + "; last power " +
                                  r.witness->to_string());
  return r.degree;
}

int require_nilpotent(const NilA& x, int kmax) {
  NilAPairResult r = nilpotency_check(x, kmax);
  for (const NilpotencyResult* c : {&r.composite, &r.composite_prime})
    if (!c->nilpotent)
      throw NotNilpotentWithinBound("composite has no vanishing twisted power up to " + std::to_string(kmax) +
                                    "; last power " + c->witness->to_string());
  if (!r.certified())
    throw NotCertifiedNilpotent("composite degrees " + std::to_string(r.composite.degree) + " and " +
                                std::to_string(r.composite_prime.degree) + " are not adjacent");
  return r.composite.degree;
}

NilB composite(const NilA& x) {
  require_shape(x, "composite");
  const Amalgam& G = amalgam_of(x.M1);
  return {order_twist(x.order), x.M1.twisted(G.alpha_letter(x.second_letter())) * x.M2};
}

NilB composite_prime(const NilA& x) { return composite(tauA(x)); }

NilB functor_j(const NilA& x) { return x.order == Order::B1B2 ? composite(x) : composite_prime(x); }

NilB functor_jprime(const NilA& x) { return x.order == Order::B2B1 ? composite(x) : composite_prime(x); }

NilA functor_i(const NilB& y) {
  require_twist(y, Twist::Alpha, "functor_i");
  const Amalgam& G = amalgam_of(y.M);
  return {Order::B1B2, y.M.twisted(G.alpha_letter_inv(2)), RingMatrix::identity(y.M.tag(), y.rank())};
}

NilA functor_iprime(const NilB& y) {
  require_twist(y, Twist::AlphaPrime, "functor_iprime");
  const Amalgam& G = amalgam_of(y.M);
  return {Order::B2B1, y.M.twisted(G.alpha_letter_inv(1)), RingMatrix::identity(y.M.tag(), y.rank())};
}

NilA tauA(const NilA& x) {
  require_shape(x, "tauA");
  return {x.order == Order::B1B2 ? Order::B2B1 : Order::B1B2, x.M2, x.M1};
}

NilB tauB(const NilB& y) {
  require_twist(y, Twist::Alpha, "tauB");
  return {Twist::AlphaPrime, y.M.twisted(amalgam_of(y.M).alpha_letter_inv(2))};
}

NilB tauB_prime(const NilB& y) {
  require_twist(y, Twist::AlphaPrime, "tauB_prime");
  return {Twist::Alpha, y.M.twisted(amalgam_of(y.M).alpha_letter_inv(1))};
}

NilB shift(const NilB& y) {
  require_base(y.M, "shift");
  const GroupAut& tw = twist_aut(amalgam_of(y.M), y.twist);
  return {y.twist, y.M.twisted(tw.inverse())};
}

NilB scale_nil(const NilB& y, Scaling s) {
  require_base(y.M, "scale_nil");
  Twist from = s == Scaling::BetaPlus ? Twist::AlphaInv : Twist::Alpha;
  Twist to = s == Scaling::BetaPlus ? Twist::AlphaPrime : Twist::AlphaPrimeInv;
  require_twist(y, from, "scale_nil");
  // beta_u sends t^{+-1} to a single monomial t'^{-+1} g; the new matrix is g M.
  RingElem img = beta_u(RingElem::t_power(y.M.tag().with_kind(twist_ring(from)), twist_exponent(from)));
  if (img.terms().size() != 1 || img.terms().begin()->second != 1 ||
      img.terms().begin()->first.power != twist_exponent(to))
    throw InternalInconsistency("scale_nil: image of t is not a unit monomial");
  FElem g = img.terms().begin()->first.word.tail;
  return {to, y.M.left_scaled(RingElem::element(y.M.tag(), g))};
}

bool is_morphism(const NilAMorphism& m, const NilA& src, const NilA& dst) {
  require_shape(src, "is_morphism");
  require_shape(dst, "is_morphism");
  if (src.order != dst.order) throw TwistMismatch("is_morphism: objects live in different categories");
  if (m.U1.rows() != src.n1() || m.U1.cols() != dst.n1() || m.U2.rows() != src.n2() || m.U2.cols() != dst.n2())
    throw ShapeMismatch("is_morphism: U1 must be n1(src) x n1(dst) and U2 n2(src) x n2(dst)");
  const Amalgam& G = amalgam_of(src.M1);
  return m.U1.twisted(G.alpha_letter(src.first_letter())) * dst.M1 == src.M1 * m.U2 &&
         m.U2.twisted(G.alpha_letter(src.second_letter())) * dst.M2 == src.M2 * m.U1;
}

NilA direct_sum(const NilA& a, const NilA& b) {
  require_shape(a, "direct_sum");
  require_shape(b, "direct_sum");
  if (a.order != b.order) throw TwistMismatch("direct_sum: different categories");
  return {a.order, RingMatrix::block_diag(a.M1, b.M1), RingMatrix::block_diag(a.M2, b.M2)};
}

NilAMorphism block_morphism(const NilAMorphism& a, const NilAMorphism& b, const NilAMorphism& c,
                            const NilAMorphism& d) {
  return {RingMatrix::blocks(a.U1, b.U1, c.U1, d.U1), RingMatrix::blocks(a.U2, b.U2, c.U2, d.U2)};
}

NilAMorphism stack_morphism(const NilAMorphism& a, const NilAMorphism& b) {
  return {RingMatrix::vstack(a.U1, b.U1), RingMatrix::vstack(a.U2, b.U2)};
}

NilAMorphism zero_morphism(const NilA& src, const NilA& dst) {
  const RingTag& tag = src.M1.tag();
  return {RingMatrix::zero(tag, src.n1(), dst.n1()), RingMatrix::zero(tag, src.n2(), dst.n2())};
}

NilAMorphism identity_morphism(const NilA& x) {
  const RingTag& tag = x.M1.tag();
  return {RingMatrix::identity(tag, x.n1()), RingMatrix::identity(tag, x.n2())};
}

NilA transport(const NilA& x, const RingMatrix& U1, const RingMatrix& U1inv, const RingMatrix& U2,
               const RingMatrix& U2inv) {
  require_shape(x, "transport");
  if (!(U1 * U1inv).is_identity() || !(U2 * U2inv).is_identity())
    throw NotInvertible("transport: supplied inverses do not invert");
  const Amalgam& G = amalgam_of(x.M1);
  return {x.order, U1inv.twisted(G.alpha_letter(x.first_letter())) * x.M1 * U2,
          U2inv.twisted(G.alpha_letter(x.second_letter())) * x.M2 * U1};
}

ProofObjects build_proof_objects(const NilA& x) {
  require_shape(x, "build_proof_objects");
  if (x.order != Order::B1B2) throw TwistMismatch("build_proof_objects expects Nil(R[F]; B1, B2)");
  const RingTag& tag = x.M1.tag();
  const Amalgam& G = *tag.amalgam;
  const std::size_t n1 = x.n1(), n2 = x.n2();
  const RingMatrix& A = x.M1;
  const RingMatrix& B = x.M2;
  const RingMatrix Bbar = B.twisted(G.alpha_letter_inv(2));
  auto I = [&](std::size_t n) { return RingMatrix::identity(tag, n); };
  auto Z = [&](std::size_t r, std::size_t c) { return RingMatrix::zero(tag, r, c); };

  ProofObjects p;
  p.x = x;
  p.x1 = {Order::B1B2, RingMatrix::hstack(Z(n1, n1), A), RingMatrix::vstack(I(n1), B)};
  p.x2 = functor_i(functor_j(x));
  p.a = {Order::B1B2, Z(0, n2), Z(n2, 0)};
  p.a1 = {Order::B1B2, Z(0, n1), Z(n1, 0)};
  p.f = {I(n1), RingMatrix::hstack(Z(n2, n1), I(n2))};
  p.f1 = {I(n1), RingMatrix::vstack(I(n1), Bbar)};
  p.g = {Z(0, n1), RingMatrix::hstack(-Bbar, I(n2))};
  p.g1 = {Z(n1, 0), RingMatrix::vstack(I(n1), Z(n2, n1))};
  p.h = {Z(0, 0), Bbar};
  return p;
}

nlohmann::json to_json(const NilB& y) {
  return {{"type", "B"}, {"twist", to_string(y.twist)}, {"rank", y.rank()}, {"M", y.M.to_literals()}};
}

nlohmann::json to_json(const NilA& x) {
  return {{"type", "A"},
          {"order", x.order == Order::B1B2 ? "B1B2" : "B2B1"},
          {"n1", x.n1()},
          {"n2", x.n2()},
          {"M1", x.M1.to_literals()},
          {"M2", x.M2.to_literals()}};
}

namespace {

RingMatrix matrix_from_json(const nlohmann::json& j, const RingTag& tag, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw ShapeMismatch("matrix rows do not match declared size");
  RingMatrix m(tag, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ShapeMismatch("matrix columns do not match declared size");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = parse_ring_literal(j[r][c].get<std::string>(), tag);
  }
  return m;
}

}  // namespace

NilB nilB_from_json(const nlohmann::json& j, const RingTag& base) {
  try {
    if (j.at("type") != "B") throw ParseError("expected a type B object");
    auto n = j.at("rank").get<std::size_t>();
    return {parse_twist(j.at("twist").get<std::string>()),
            matrix_from_json(j.at("M"), base.with_kind(RingKind::GroupRingF), n, n)};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("Nil object: ") + e.what());
  }
}

NilA nilA_from_json(const nlohmann::json& j, const RingTag& base) {
  try {
    if (j.at("type") != "A") throw ParseError("expected a type A object");
    std::string o = j.at("order").get<std::string>();
    if (o != "B1B2" && o != "B2B1") throw ParseError("order must be B1B2 or B2B1");
    auto n1 = j.at("n1").get<std::size_t>(), n2 = j.at("n2").get<std::size_t>();
    RingTag tag = base.with_kind(RingKind::GroupRingF);
    return make_nilA(o == "B1B2" ? Order::B1B2 : Order::B2B1, matrix_from_json(j.at("M1"), tag, n1, n2),
                     matrix_from_json(j.at("M2"), tag, n2, n1));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("Nil object: ") + e.what());
  }
}

}  // namespace semisplit

namespace semisplit {

bool double_cosets_are_cosets(const Amalgam& G, int letter) {
  const BaseGroup& F = G.F();
  std::vector<FElem> elems = F.is_finite() ? F.finite_elements() : F.ball(1);
  for (const FElem& f0 : elems) {
    GroupWord x = G.mul(G.letter(letter), G.element(f0));
    for (const FElem& a : elems)
      for (const FElem& b : elems) {
        GroupWord y = G.mul(G.element(a), G.mul(x, G.element(b)));
        // y lies in x F iff x^{-1} y has no letters.
        if (!G.mul(G.inverse(x), y).letters.empty()) return false;
      }
  }
  return true;
}

}  // namespace semisplit
