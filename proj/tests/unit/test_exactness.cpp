#include <gtest/gtest.h>

#include "semisplit/error.hpp"
#include "semisplit/exactness.hpp"
#include "semisplit/random.hpp"
#include "support.hpp"

using namespace semisplit;
using testsupport::fixture;
using testsupport::tag;

namespace {

RingTag base(const char* name, CoeffRing c = CoeffRing::integers()) {
  return tag(fixture(name), RingKind::GroupRingF, c);
}

}  // namespace

TEST(Exactness, RegularRepresentationIsMultiplicative) {
  const RingTag T = base("FIX-N");
  Rng rng(1, "regrep");
  for (int i = 0; i < 10; ++i) {
    RingMatrix A = random_matrix(rng, T, 2, 3), B = random_matrix(rng, T, 3, 2);
    const std::size_t N = 6;
    EXPECT_EQ(lattice::multiply(regular_representation(A), regular_representation(B), 3 * N, 2 * N),
              regular_representation(A * B));
  }
}

TEST(Exactness, IdentityIntoZero) {
  const RingTag T = base("FIX-Q");
  Rng rng(2, "idzero");
  NilA y = random_nilA(rng, T, Order::B1B2);
  NilA zero = make_nilA(Order::B1B2, RingMatrix::zero(T, 0, 0), RingMatrix::zero(T, 0, 0));
  ExactnessReport r = check_exact(y, y, zero, identity_morphism(y), zero_morphism(y, zero));
  EXPECT_TRUE(r.exact()) << r.to_json().dump();
  ExactnessReport bad = check_exact(y, y, y, identity_morphism(y), zero_morphism(y, y));
  if (y.n1() + y.n2() > 0) EXPECT_FALSE(bad.exact());
}

TEST(Exactness, ProofSequencesAreExact) {
  for (const char* name : {"FIX-D", "FIX-Q", "FIX-S"})
    for (CoeffRing c : {CoeffRing::integers(), CoeffRing::mod(3)}) {
      const RingTag T = base(name, c);
      Rng rng(3, std::string("exact/") + name + c.name());
      for (int i = 0; i < 50; ++i) {
        NilA x = random_nilA(rng, T, Order::B1B2);
        for (const ShortSequence& s : proof_sequences(build_proof_objects(x))) {
          ExactnessReport r = check_exact(s);
          ASSERT_TRUE(r.exact()) << name << " " << c.name() << " " << r.to_json().dump();
        }
      }
    }
}

TEST(Exactness, CorruptedGFailsInTheMiddle) {
  const RingTag T = base("FIX-S");
  NilA x = make_nilA(Order::B1B2, RingMatrix::from_literals(T, {{"1", "w"}}),
                     RingMatrix::from_literals(T, {{"1 - w"}, {"0"}}));
  ProofObjects p = build_proof_objects(x);
  ShortSequence s = proof_sequences(p)[1];
  ASSERT_TRUE(check_exact(s).exact());
  ASSERT_FALSE(s.in.U2.at(0, 0).is_zero());
  s.in.U2.at(0, 0) = -s.in.U2.at(0, 0);
  ExactnessReport r = check_exact(s);
  ASSERT_FALSE(r.exact());
  const ExactnessVerdict* f = r.first_failure();
  // The corrupted g is no longer a morphism; the linear algebra still locates the defect.
  bool middle_failed = false;
  for (const auto& v : r.verdicts)
    if (v.position == "middle" && !v.ok) {
      middle_failed = true;
      EXPECT_FALSE(v.witness.empty());
    }
  EXPECT_TRUE(middle_failed);
  EXPECT_NE(f, nullptr);
  EXPECT_THROW(require_exact(s.L, s.M, s.R, s.in, s.out), NotExactAt);
}

TEST(Exactness, RejectsInfiniteF) {
  const RingTag T = base("FIX-G0");
  NilA x = make_nilA(Order::B1B2, RingMatrix::zero(T, 1, 1), RingMatrix::zero(T, 1, 1));
  ProofObjects p = build_proof_objects(x);
  EXPECT_THROW(check_exact(proof_sequences(p)[1]), UnsupportedCoefficients);
}

TEST(Exactness, ReportJson) {
  const RingTag T = base("FIX-D");
  NilA x = make_nilA(Order::B1B2, RingMatrix::from_literals(T, {{"1"}}), RingMatrix::from_literals(T, {{"0"}}));
  nlohmann::json j = check_exact(proof_sequences(build_proof_objects(x))[0]).to_json();
  EXPECT_TRUE(j.at("exact").get<bool>());
  EXPECT_EQ(j.at("verdicts").size(), 11u);
}
