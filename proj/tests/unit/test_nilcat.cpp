#include <gtest/gtest.h>

#include "semisplit/error.hpp"
#include "semisplit/literal.hpp"
#include "semisplit/nilcat.hpp"
#include "semisplit/random.hpp"
#include "support.hpp"

using namespace semisplit;
using testsupport::fixture;
using testsupport::kFixtures;
using testsupport::tag;

namespace {

const CoeffRing kCoeffs[] = {CoeffRing::integers(), CoeffRing::mod(3)};

RingMatrix mat(const RingTag& T, std::vector<std::vector<std::string>> rows) {
  return RingMatrix::from_literals(T, rows);
}

RingTag base(const char* name, CoeffRing c = CoeffRing::integers()) {
  return tag(fixture(name), RingKind::GroupRingF, c);
}

}  // namespace

TEST(Nil, TwistedPowerUntwistedIsPlainPower) {
  const RingTag T = base("FIX-Q");
  Rng rng(1, "tp-plain");
  for (int i = 0; i < 50; ++i) {
    RingMatrix M = random_matrix(rng, T, 2, 2, 3);
    RingMatrix P = RingMatrix::identity(T, 2);
    for (int k = 1; k <= 4; ++k) {
      P = P * M;
      ASSERT_EQ(twisted_power(M, GroupAut::identity(T.amalgam->F()), k), P);
    }
  }
}

TEST(Nil, TwistedPowerGoldenFixS) {
  const RingTag T = base("FIX-S", CoeffRing::mod(3));
  const RingMatrix M = mat(T, {{"1 - w"}});
  const GroupAut& a = T.amalgam->alpha();
  EXPECT_EQ(twisted_power(M, a, 1), M);
  EXPECT_EQ(twisted_power(M, a, 2), mat(T, {{"2 - w - w^2"}}));
  EXPECT_TRUE(twisted_power(M, a, 3).is_zero());
  EXPECT_EQ(require_nilpotent(NilB{Twist::Alpha, M}), 3);
  EXPECT_THROW(twisted_power(mat(T, {{"1", "0"}}), a, 2), NonSquare);
}

TEST(Nil, TwistedPowerRecursionMatchesDefinition) {
  for (const char* name : kFixtures) {
    const RingTag T = base(name);
    const GroupAut& a = T.amalgam->alpha();
    Rng rng(2, std::string("tp-rec/") + name);
    for (int i = 0; i < 10; ++i) {
      RingMatrix M = random_matrix(rng, T, 2, 2);
      RingMatrix twk = M;
      for (int k = 1; k <= 3; ++k) {
        twk = twk.twisted(a);  // alpha^k(M)
        ASSERT_EQ(twisted_power(M, a, k + 1), twk * twisted_power(M, a, k)) << name;
      }
    }
  }
}

TEST(Nil, StrictlyUpperTriangularVanishes) {
  const RingTag T = base("FIX-Q");
  RingMatrix M = mat(T, {{"0", "1 + s", "2"}, {"0", "0", "s"}, {"0", "0", "0"}});
  EXPECT_TRUE(twisted_power(M, GroupAut::identity(T.amalgam->F()), 3).is_zero());
  EXPECT_FALSE(twisted_power(M, GroupAut::identity(T.amalgam->F()), 2).is_zero());
}

TEST(Nil, NilpotencyExamples) {
  const RingTag T = base("FIX-D");
  EXPECT_EQ(require_nilpotent(NilB{Twist::Alpha, RingMatrix::zero(T, 2, 2)}), 1);
  NilA bad = make_nilA(Order::B1B2, mat(T, {{"1"}}), mat(T, {{"1"}}));
  EXPECT_FALSE(nilpotency_check(bad, 8).composite.nilpotent);
  EXPECT_THROW(require_nilpotent(bad, 8), NotNilpotentWithinBound);
  EXPECT_THROW(require_nilpotent(NilB{Twist::Alpha, mat(T, {{"1"}})}, 5), NotNilpotentWithinBound);
}

TEST(Nil, NilAAndCompositeCertifyTogether) {
  for (const char* name : kFixtures)
    for (Order o : {Order::B1B2, Order::B2B1}) {
      const RingTag T = base(name);
      Rng rng(4, std::string("nilA-cert/") + name);
      for (int i = 0; i < 40; ++i) {
        NilA x = random_nilA(rng, T, o);
        NilAPairResult r = nilpotency_check(x);
        ASSERT_TRUE(r.certified()) << name;
        ASSERT_EQ(r.composite.degree, nilpotency_check(o == Order::B1B2 ? functor_j(x) : functor_jprime(x)).degree);
      }
    }
}

TEST(Nil, FunctorJExamples) {
  const RingTag D = base("FIX-D");
  NilA x = make_nilA(Order::B1B2, mat(D, {{"0", "1"}, {"0", "0"}}), RingMatrix::identity(D, 2));
  NilB y = functor_j(x);
  EXPECT_EQ(y.twist, Twist::Alpha);
  EXPECT_EQ(y.M, mat(D, {{"0", "1"}, {"0", "0"}}));
  EXPECT_EQ(x.k0_defect(), 0);

  NilA z = make_nilA(Order::B1B2, RingMatrix::zero(D, 1, 3), mat(D, {{"1"}, {"2"}, {"0"}}));
  EXPECT_TRUE(functor_j(z).M.is_zero());
  EXPECT_EQ(z.k0_defect(), 2);

  const RingTag S = base("FIX-S");
  NilA w = make_nilA(Order::B1B2, mat(S, {{"w"}}), mat(S, {{"1"}}));
  EXPECT_EQ(functor_j(w).M, mat(S, {{"w"}}));
  NilB wp = functor_jprime(w);
  EXPECT_EQ(wp.twist, Twist::AlphaPrime);
  EXPECT_EQ(wp.M, mat(S, {{"w"}}));
}

TEST(Nil, FunctorIExamples) {
  const RingTag D = base("FIX-D");
  NilA x = functor_i(NilB{Twist::Alpha, RingMatrix::zero(D, 2, 2)});
  EXPECT_TRUE(x.M1.is_zero());
  EXPECT_TRUE(x.M2.is_identity());
  NilB y{Twist::Alpha, mat(D, {{"0", "1"}, {"0", "0"}})};
  EXPECT_EQ(functor_i(y).M1, y.M);
  EXPECT_EQ(functor_j(functor_i(y)), y);

  const RingTag S = base("FIX-S");
  NilB ys{Twist::Alpha, mat(S, {{"w"}})};
  EXPECT_EQ(functor_i(ys).M1, mat(S, {{"w"}}));
  EXPECT_EQ(functor_j(functor_i(ys)), ys);
  EXPECT_THROW(functor_i(NilB{Twist::AlphaPrime, mat(S, {{"w"}})}), TwistMismatch);
}

TEST(Nil, JAfterIIsIdentity) {
  for (const char* name : kFixtures)
    for (CoeffRing c : kCoeffs) {
      const RingTag T = base(name, c);
      Rng rng(5, std::string("ji/") + name + c.name());
      for (int i = 0; i < 200; ++i) {
        NilB y = random_nilB(rng, T, Twist::Alpha);
        ASSERT_EQ(functor_j(functor_i(y)), y) << name;
        NilB yp = random_nilB(rng, T, Twist::AlphaPrime);
        ASSERT_EQ(functor_jprime(functor_iprime(yp)), yp) << name;
      }
    }
}

TEST(Nil, Transpositions) {
  for (const char* name : kFixtures) {
    const RingTag T = base(name);
    const Amalgam& G = *T.amalgam;
    const bool alpha_trivial = G.alpha() == GroupAut::identity(G.F());
    Rng rng(6, std::string("tau/") + name);
    for (int i = 0; i < 100; ++i) {
      NilA x = random_nilA(rng, T, Order::B1B2);
      NilA tx = tauA(x);
      ASSERT_EQ(tx.M1, x.M2);
      ASSERT_EQ(tx.k0_defect(), -x.k0_defect());
      ASSERT_EQ(tauA(tx), x);

      NilB y = random_nilB(rng, T, Twist::Alpha);
      NilB closed = tauB(y);
      ASSERT_EQ(closed, functor_jprime(tauA(functor_i(y)))) << name;
      ASSERT_EQ(functor_jprime(tauA(functor_i(y))), functor_jprime(functor_iprime(closed)));
      NilB back = tauB_prime(closed);
      ASSERT_EQ(back, shift(y));
      if (alpha_trivial) ASSERT_EQ(back, y);
      NilB yp = random_nilB(rng, T, Twist::AlphaPrime);
      ASSERT_EQ(tauB_prime(yp), functor_j(tauA(functor_iprime(yp))));
    }
  }
}

TEST(Nil, ShiftIsNotIdentityWhenAlphaActs) {
  const RingTag S = base("FIX-S");
  NilB y{Twist::Alpha, mat(S, {{"w"}})};
  EXPECT_EQ(tauB_prime(tauB(y)).M, mat(S, {{"w^2"}}));
}

TEST(Nil, ScalingExamples) {
  const RingTag D = base("FIX-D");
  NilB y{Twist::AlphaInv, mat(D, {{"0", "3"}, {"0", "0"}})};
  NilB z = scale_nil(y, Scaling::BetaPlus);
  EXPECT_EQ(z.twist, Twist::AlphaPrime);
  EXPECT_EQ(z.M, y.M);

  const RingTag Q = base("FIX-Q");
  NilB q{Twist::AlphaInv, mat(Q, {{"0", "1 + 2*s"}, {"0", "0"}})};
  EXPECT_EQ(scale_nil(q, Scaling::BetaPlus).M, mat(Q, {{"0", "s + 2"}, {"0", "0"}}));
  NilB qm{Twist::Alpha, q.M};
  EXPECT_EQ(scale_nil(qm, Scaling::BetaMinus).twist, Twist::AlphaPrimeInv);
  EXPECT_EQ(scale_nil(qm, Scaling::BetaMinus).M, mat(Q, {{"0", "s + 2"}, {"0", "0"}}));
  EXPECT_THROW(scale_nil(qm, Scaling::BetaPlus), TwistMismatch);
}

TEST(Nil, ScalingPreservesDegree) {
  for (const char* name : kFixtures) {
    const RingTag T = base(name);
    Rng rng(7, std::string("scale/") + name);
    for (int i = 0; i < 100; ++i) {
      NilB y = random_nilB(rng, T, Twist::AlphaInv);
      ASSERT_EQ(require_nilpotent(scale_nil(y, Scaling::BetaPlus)), require_nilpotent(y)) << name;
      NilB z = random_nilB(rng, T, Twist::Alpha);
      ASSERT_EQ(require_nilpotent(scale_nil(z, Scaling::BetaMinus)), require_nilpotent(z)) << name;
    }
  }
}

TEST(Nil, ProofObjectExamples) {
  const RingTag D = base("FIX-D");
  NilA zero = make_nilA(Order::B1B2, RingMatrix::zero(D, 1, 2), RingMatrix::zero(D, 2, 1));
  ProofObjects p = build_proof_objects(zero);
  EXPECT_EQ(p.x1.M1, RingMatrix::zero(D, 1, 3));
  EXPECT_EQ(p.x1.M2, mat(D, {{"1"}, {"0"}, {"0"}}));
  EXPECT_EQ(p.x1.n1(), 1u);
  EXPECT_EQ(p.x1.n2(), 3u);
  EXPECT_EQ(p.a1.n1(), 0u);
  EXPECT_EQ(p.a1.n2(), 1u);

  NilA x = make_nilA(Order::B1B2, mat(D, {{"1"}}), mat(D, {{"0"}}));
  ProofObjects q = build_proof_objects(x);
  EXPECT_TRUE(q.x2.M1.is_zero());
  EXPECT_TRUE(q.x2.M2.is_identity());
  EXPECT_EQ(functor_i(functor_j(x)), q.x2);
}

TEST(Nil, ProofMorphismsAndIJ) {
  for (const char* name : kFixtures)
    for (CoeffRing c : kCoeffs) {
      const RingTag T = base(name, c);
      Rng rng(8, std::string("proof/") + name + c.name());
      for (int i = 0; i < 200; ++i) {
        NilA x = random_nilA(rng, T, Order::B1B2);
        ProofObjects p = build_proof_objects(x);
        ASSERT_EQ(functor_i(functor_j(x)), p.x2);
        if (i % 4) continue;
        ASSERT_TRUE(is_morphism(p.f, p.x, p.x1)) << name;
        ASSERT_TRUE(is_morphism(p.f1, p.x1, p.x2)) << name;
        ASSERT_TRUE(is_morphism(p.g, p.a, p.x1)) << name;
        ASSERT_TRUE(is_morphism(p.g1, p.x1, p.a1)) << name;
        ASSERT_TRUE(is_morphism(p.h, p.a, p.a1)) << name;
      }
    }
}

TEST(Nil, MorphismCheckRejects) {
  const RingTag S = base("FIX-S");
  NilA x = make_nilA(Order::B1B2, mat(S, {{"w"}}), mat(S, {{"0"}}));
  ProofObjects p = build_proof_objects(x);
  NilAMorphism bad = p.f;
  bad.U1 = mat(S, {{"w"}});
  EXPECT_FALSE(is_morphism(bad, p.x, p.x1));
  EXPECT_THROW(is_morphism(p.f, p.x1, p.x), ShapeMismatch);
}

TEST(Nil, DefectAdditive) {
  const RingTag T = base("FIX-S");
  Rng rng(9, "defect");
  for (int i = 0; i < 50; ++i) {
    NilA a = random_nilA(rng, T, Order::B1B2), b = random_nilA(rng, T, Order::B1B2);
    ASSERT_EQ(direct_sum(a, b).k0_defect(), a.k0_defect() + b.k0_defect());
  }
}

TEST(Nil, DoubleCosetsAreCosets) {
  for (const char* name : kFixtures)
    for (int letter : {1, 2}) EXPECT_TRUE(double_cosets_are_cosets(*fixture(name), letter)) << name;
}

TEST(Nil, JsonRoundTrip) {
  for (const char* name : kFixtures) {
    const RingTag T = base(name, CoeffRing::mod(5));
    Rng rng(10, std::string("json/") + name);
    for (int i = 0; i < 20; ++i) {
      NilA x = random_nilA(rng, T, i % 2 ? Order::B1B2 : Order::B2B1);
      ASSERT_EQ(nilA_from_json(to_json(x), T), x);
      NilB y = random_nilB(rng, T, Twist::AlphaPrimeInv);
      ASSERT_EQ(nilB_from_json(to_json(y), T), y);
    }
  }
  EXPECT_THROW(nilB_from_json(nlohmann::json{{"type", "B"}, {"rank", 1}, {"twist", "alpha"}, {"M", {{"1", "2"}}}},
                              base("FIX-D")),
               ShapeMismatch);
  EXPECT_THROW(nilB_from_json(nlohmann::json{{"type", "B"}}, base("FIX-D")), ParseError);
}
