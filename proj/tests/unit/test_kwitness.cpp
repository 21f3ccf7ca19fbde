#include <gtest/gtest.h>

#include "semisplit/error.hpp"
#include "semisplit/kwitness.hpp"
#include "semisplit/literal.hpp"
#include "semisplit/random.hpp"
#include "support.hpp"

using namespace semisplit;
using testsupport::fixture;
using testsupport::kFixtures;
using testsupport::tag;

namespace {

RingTag base(const char* name, CoeffRing c = CoeffRing::integers()) {
  return tag(fixture(name), RingKind::GroupRingF, c);
}

RingMatrix mat(const RingTag& T, std::vector<std::vector<std::string>> rows) {
  return RingMatrix::from_literals(T, rows);
}

}  // namespace

TEST(K1, SigmaBZeroIsIdentity) {
  const RingTag T = base("FIX-Q");
  K1Witness w = sigma_B(NilB{Twist::Alpha, RingMatrix::zero(T, 3, 3)});
  EXPECT_TRUE(w.matrix().is_identity());
  EXPECT_EQ(w.tag().kind, RingKind::PolyPlus);
}

TEST(K1, SigmaBGoldenFixS) {
  const RingTag T = base("FIX-S", CoeffRing::mod(3));
  K1Witness w = sigma_B(NilB{Twist::Alpha, mat(T, {{"1 - w"}})});
  const RingTag P = T.with_kind(RingKind::PolyPlus);
  EXPECT_EQ(w.matrix(), mat(P, {{"1 - t + t*w"}}));
  EXPECT_EQ(w.inverse(), mat(P, {{"1 + t - t*w + t^2*(2 - w - w^2)"}}));
  K1Witness m = sigma_B(NilB{Twist::AlphaInv, mat(T, {{"1 - w"}})});
  EXPECT_EQ(m.tag().kind, RingKind::PolyMinus);
  EXPECT_EQ(m.matrix(), mat(T.with_kind(RingKind::PolyMinus), {{"1 - t^-1 + t^-1*w"}}));
}

TEST(K1, SigmaBRejectsNonNilpotent) {
  const RingTag T = base("FIX-D");
  EXPECT_THROW(sigma_B(NilB{Twist::Alpha, mat(T, {{"1"}})}, 8), NotCertifiedNilpotent);
  EXPECT_THROW(sigma_A(make_nilA(Order::B1B2, mat(T, {{"1"}}), mat(T, {{"1"}})), 8), NotCertifiedNilpotent);
}

TEST(K1, SigmaBCombinedIsBlockDiagonal) {
  for (const char* name : kFixtures) {
    const RingTag T = base(name);
    Rng rng(1, std::string("combined/") + name);
    for (int i = 0; i < 20; ++i) {
      NilB p = random_nilB(rng, T, Twist::Alpha), m = random_nilB(rng, T, Twist::AlphaInv);
      K1Witness w = sigma_B_combined(p, m);
      EXPECT_EQ(w.tag().kind, RingKind::Laurent);
      EXPECT_TRUE(w.matrix().block(0, p.rank(), p.rank(), m.rank()).is_zero());
      EXPECT_TRUE(w.matrix().block(p.rank(), 0, m.rank(), p.rank()).is_zero());
      EXPECT_EQ(w.matrix().block(0, 0, p.rank(), p.rank()), sigma_B(p).matrix().retag(RingKind::Laurent));
    }
  }
  const RingTag T = base("FIX-D");
  EXPECT_THROW(sigma_B_combined(NilB{Twist::Alpha, RingMatrix::zero(T, 1, 1)},
                                NilB{Twist::AlphaPrimeInv, RingMatrix::zero(T, 1, 1)}),
               TwistMismatch);
}

TEST(K1, SigmaAExamples) {
  const RingTag D = base("FIX-D");
  const RingTag DG = D.with_kind(RingKind::GroupRingG);
  EXPECT_TRUE(sigma_A(make_nilA(Order::B1B2, RingMatrix::zero(D, 2, 1), RingMatrix::zero(D, 1, 2))).matrix().is_identity());
  EXPECT_EQ(sigma_A(make_nilA(Order::B1B2, mat(D, {{"1"}}), mat(D, {{"0"}}))).matrix(),
            mat(DG, {{"1", "T1"}, {"0", "1"}}));
  const RingTag S = base("FIX-S");
  const RingTag SG = S.with_kind(RingKind::GroupRingG);
  const NilA unit = make_nilA(Order::B1B2, mat(S, {{"w"}}), mat(S, {{"1"}}));
  EXPECT_EQ(sigma_A_matrix(unit), mat(SG, {{"1", "T1*w"}, {"T2", "1"}}));
  // The composite w is a unit, so the object is not nilpotent.
  EXPECT_THROW(sigma_A(unit), NotCertifiedNilpotent);
  // T1 w = w^2 T1 in FIX-S.
  EXPECT_EQ(mat(SG, {{"T1*w"}}), mat(SG, {{"w^2*T1"}}));
}

TEST(K1, SigmaADiagonalizesOnBothSides) {
  for (const char* name : kFixtures) {
    const RingTag T = base(name);
    Rng rng(2, std::string("diag/") + name);
    for (int i = 0; i < 40; ++i) {
      NilA x = random_nilA(rng, T, Order::B1B2);
      std::vector<DiagonalReport> reps;
      ASSERT_NO_THROW(reps = verify_sigmaA_diagonalization(x)) << name;
      ASSERT_EQ(reps[0].D, theta_image(sigma_B(functor_j(x)).matrix()));
      ASSERT_EQ(reps[1].D, theta_image(sigma_B(functor_jprime(x)).matrix()));
      ASSERT_TRUE(reps[0].certificate.verify());
    }
  }
}

TEST(K1, NaiveEliminationLeavesResidual) {
  const RingTag S = base("FIX-S");
  NilA xs = make_nilA(Order::B1B2, mat(S, {{"0", "w"}, {"0", "0"}}), RingMatrix::identity(S, 2));
  EXPECT_TRUE(diagonalize_sigmaA(xs, EliminationSide::TPrime).ok);
  DiagonalReport naive = diagonalize_sigmaA(xs, EliminationSide::TPrime, true);
  EXPECT_FALSE(naive.ok);
  EXPECT_FALSE(naive.residual.is_zero());

  const RingTag N = base("FIX-N");
  NilA xn = make_nilA(Order::B1B2, mat(N, {{"0", "1"}, {"0", "0"}}), mat(N, {{"a", "0"}, {"0", "a"}}));
  EXPECT_TRUE(diagonalize_sigmaA(xn, EliminationSide::T).ok);
  EXPECT_FALSE(diagonalize_sigmaA(xn, EliminationSide::T, true).ok);
}

TEST(K1, SigmaASwap) {
  for (const char* name : kFixtures) {
    const RingTag T = base(name);
    Rng rng(3, std::string("swap/") + name);
    for (int i = 0; i < 30; ++i) ASSERT_NO_THROW(verify_sigmaA_swap(random_nilA(rng, T, Order::B1B2))) << name;
  }
}

TEST(K1, InductionKey) {
  for (const char* name : kFixtures) {
    const RingTag T = base(name);
    Rng rng(4, std::string("induction/") + name);
    for (int i = 0; i < 100; ++i) {
      NilB y = random_nilB(rng, T, Twist::Alpha);
      ElementaryCertificate c;
      ASSERT_NO_THROW(c = verify_induction_key(y)) << name;
      ASSERT_TRUE(c.verify());
    }
  }
  const RingTag D = base("FIX-D");
  NilB y{Twist::Alpha, mat(D, {{"0", "1"}, {"0", "0"}})};
  ElementaryCertificate c = verify_induction_key(y);
  const RingTag DG = D.with_kind(RingKind::GroupRingG);
  EXPECT_EQ(c.target.block(0, 0, 2, 2), mat(DG, {{"1", "-[T1 T2]"}, {"0", "1"}}));
}

TEST(K1, InductionSecondBranch) {
  for (const char* name : kFixtures) {
    const RingTag T = base(name);
    Rng rng(5, std::string("induction2/") + name);
    for (int i = 0; i < 50; ++i) ASSERT_NO_THROW(verify_induction_second_branch(random_nilB(rng, T, Twist::AlphaInv)))
        << name;
  }
  EXPECT_THROW(verify_induction_second_branch(NilB{Twist::Alpha, RingMatrix::zero(base("FIX-Q"), 1, 1)}),
               TwistMismatch);
}

TEST(K1, ScalingWitnesses) {
  for (const char* name : kFixtures) {
    const RingTag T = base(name);
    Rng rng(6, std::string("scalingG3/") + name);
    for (int i = 0; i < 100; ++i) {
      NilB m = random_nilB(rng, T, Twist::AlphaInv), p = random_nilB(rng, T, Twist::Alpha);
      ASSERT_NO_THROW(verify_scaling_witness(m, Scaling::BetaPlus)) << name;
      ASSERT_NO_THROW(verify_scaling_witness(p, Scaling::BetaMinus)) << name;
      if (i % 5 == 0) ASSERT_NO_THROW(verify_scaling_combined(p, m)) << name;
    }
  }
}

TEST(K1, TransferIdentity) {
  const RingTag G = base("FIX-S").with_kind(RingKind::GroupRingG);
  EXPECT_TRUE(transfer_theta(RingMatrix::identity(G, 3)).is_identity());
  EXPECT_EQ(transfer_theta(RingMatrix::identity(G, 3)).rows(), 6u);
}

TEST(K1, TransferIsMultiplicative) {
  for (const char* name : kFixtures) {
    const RingTag G = base(name).with_kind(RingKind::GroupRingG);
    Rng rng(7, std::string("transfer-mult/") + name);
    for (int i = 0; i < 10; ++i) {
      RingMatrix A = random_matrix(rng, G, 2, 2), B = random_matrix(rng, G, 2, 2);
      ASSERT_EQ(transfer_theta(A * B), transfer_theta(A) * transfer_theta(B)) << name;
    }
  }
}

TEST(K1, TransferDiagonalization) {
  const RingTag D = base("FIX-D");
  TransferReport z = verify_transfer_diagonalization(make_nilA(Order::B1B2, mat(D, {{"0"}}), mat(D, {{"0"}})));
  EXPECT_TRUE(z.certificate.target.is_identity());
  EXPECT_EQ(z.certificate.target.rows(), 4u);
  for (const char* name : kFixtures) {
    const RingTag T = base(name);
    Rng rng(8, std::string("transfer/") + name);
    for (int i = 0; i < 100; ++i) {
      TransferReport r;
      ASSERT_NO_THROW(r = verify_transfer_diagonalization(random_nilA(rng, T, Order::B1B2))) << name;
      ASSERT_TRUE(r.certificate.verify());
    }
  }
}

TEST(K1, TransferPaperLayout) {
  const RingTag S = base("FIX-S");
  TransferReport r = verify_transfer_diagonalization(
      make_nilA(Order::B1B2, mat(S, {{"0", "w"}, {"0", "0"}}), RingMatrix::identity(S, 2)));
  const RingTag L = S.with_kind(RingKind::Laurent);
  // Basis order P1, t1 P2, P2, t1 P1.
  EXPECT_EQ(r.transferred.block(0, 0, 4, 4),
            mat(L, {{"1", "0", "0", "w^2"}, {"0", "1", "0", "0"}, {"t", "0", "1", "0"}, {"0", "t", "0", "1"}}));
  EXPECT_TRUE(r.transferred.block(0, 4, 4, 4).is_zero());
  EXPECT_EQ(r.D1, mat(L, {{"1", "-t*w"}, {"0", "1"}}));
}

TEST(K1, TransferAdditivity) {
  for (const char* name : kFixtures) {
    const RingTag G = base(name).with_kind(RingKind::GroupRingG);
    Rng rng(9, std::string("additive/") + name);
    for (int i = 0; i < 10; ++i)
      ASSERT_NO_THROW(verify_transfer_additivity(random_matrix(rng, G, 2, 2), random_matrix(rng, G, 1, 1)));
  }
}

TEST(K1, CertificateJsonReplay) {
  const RingTag T = base("FIX-N", CoeffRing::mod(7));
  Rng rng(10, "cert-json");
  NilA x = random_nilA(rng, T, Order::B1B2);
  ElementaryCertificate c = diagonalize_sigmaA(x, EliminationSide::TPrime).certificate;
  ElementaryCertificate back = ElementaryCertificate::from_json(c.to_json(), T);
  EXPECT_TRUE(back.verify());
  EXPECT_EQ(back.target, c.target);
  EXPECT_EQ(back.ops.size(), c.ops.size());
  if (!back.ops.empty()) {
    back.ops[0].lambda = back.ops[0].lambda + RingElem::scalar(back.ops[0].lambda.tag(), 1);
    EXPECT_FALSE(back.verify());
  }
  nlohmann::json bad = c.to_json();
  bad["schema"] = "other";
  EXPECT_THROW(ElementaryCertificate::from_json(bad, T), ParseError);
}

TEST(K1, WitnessRejectsWrongInverse) {
  const RingTag G = base("FIX-Q").with_kind(RingKind::GroupRingG);
  EXPECT_THROW(K1Witness::create(mat(G, {{"1", "T1"}, {"0", "1"}}), RingMatrix::identity(G, 2)), NotInvertible);
}
