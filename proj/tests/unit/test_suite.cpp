#include <gtest/gtest.h>

#include "semisplit/error.hpp"
#include "semisplit/suite.hpp"

using namespace semisplit;
using namespace semisplit::suite;

namespace {

Config small() {
  Config c;
  c.samples = 5;
  c.fixtures = {"FIX-S", "FIX-D"};
  c.fixtures_dir = SEMISPLIT_FIXTURE_DIR;
  c.dinfty_max_generators = 1;
  return c;
}

}  // namespace

TEST(Suite, ChecksAreSortedAndUnique) {
  const auto& all = checks();
  ASSERT_FALSE(all.empty());
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1].id, all[i].id);
  EXPECT_THROW(find_check("no.such"), ParseError);
}

TEST(Suite, ReportIsDeterministicAndSorted) {
  const Report a = run_suite(small(), "nil.");
  const Report b = run_suite(small(), "nil.");
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  EXPECT_TRUE(a.pass());
  ASSERT_EQ(a.records.size(), 6u);
  EXPECT_EQ(a.records[0].check, "nil.ji");
  EXPECT_EQ(a.records[0].fixture, "FIX-D");
  EXPECT_EQ(a.to_json()["schema"], kReportSchema);
  EXPECT_FALSE(a.to_json()["records"][0].contains("wall_seconds"));
  Config timed = small();
  timed.timing = true;
  EXPECT_TRUE(run_suite(timed, "groups.structural").to_json()["records"][0].contains("wall_seconds"));
}

TEST(Suite, StreamsDependOnSeedAndCheck) {
  Config c = small();
  Record r;
  r.fixture = "FIX-S";
  Context a(c, "x", nullptr, r), b(c, "y", nullptr, r);
  Rng ra = a.rng("s"), rb = b.rng("s"), ra2 = a.rng("s");
  const auto va = ra.next();
  EXPECT_EQ(va, ra2.next());
  EXPECT_NE(va, rb.next());
}

TEST(Suite, FailuresCarryWitnesses) {
  const Check bad{"zz.bad", "always fails on odd samples", false, [](Context& c) {
                    for (int i = 0; i < 20; ++i)
                      c.sample("-", [&] {
                        c.witness = {{"i", i}};
                        c.expect(i % 2 == 0, "odd");
                        if (i == 4) throw IdentityFails("thrown");
                      });
                  }};
  const Record r = run_check(bad, "-", small());
  EXPECT_EQ(r.status, "fail");
  EXPECT_EQ(r.samples_run, 20);
  EXPECT_EQ(r.failure_count, 11);
  ASSERT_EQ(r.failures.size(), 5u);
  EXPECT_EQ(r.failures[0].sample, 1);
  EXPECT_EQ(r.failures[0].witness["i"], 1);
  EXPECT_EQ(r.failures[2].message, "IdentityFails: thrown");
}

TEST(Suite, InfiniteFSkipsExactness) {
  Config c = small();
  c.fixtures = {"FIX-G0"};
  const Report r = run_suite(c, "nil.sequences");
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0].status, "skipped");
  EXPECT_TRUE(r.pass());
}
