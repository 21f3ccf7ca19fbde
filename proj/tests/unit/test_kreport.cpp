#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "semisplit/kreport.hpp"

using namespace semisplit::kreport;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(SEMISPLIT_GOLDEN_DIR) + "/" + name + ".tex");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(KReport, NormalizerKeepsControlWordSeparation) {
  EXPECT_EQ(normalize_latex("a \\oplus  b"), "a\\oplus b");
  EXPECT_EQ(normalize_latex("\\widetilde {\\mathrm{Nil}}"), "\\widetilde{\\mathrm{Nil}}");
  EXPECT_EQ(normalize_latex("x &~=~& y \\\\\n z"), "x~=~yz");
  EXPECT_NE(normalize_latex("\\oplus b"), normalize_latex("\\oplusb"));
}

TEST(KReport, TargetsMatchGoldens) {
  for (const auto& t : report_targets()) {
    const auto g = golden(t);
    ASSERT_FALSE(g.empty()) << t;
    const auto r = ktheory_report(t, t.rfind("intro-", 0) == 0 ? std::nullopt : std::optional<int>());
    EXPECT_EQ(normalize_latex(r.latex()), normalize_latex(g)) << t << "\n" << r.latex();
  }
}

TEST(KReport, DegreeSubstitution) {
  const auto r = ktheory_report("dinfty", 1);
  EXPECT_NE(r.latex().find("K_1(R[D_\\infty])"), std::string::npos);
  EXPECT_NE(r.latex().find("\\widetilde{\\mathrm{Nil}}_0(R)"), std::string::npos);
  const auto neg = ktheory_report("dinfty", -1);
  EXPECT_NE(neg.latex().find("\\mathrm{Nil}}_{-2}(R)"), std::string::npos);
  EXPECT_NE(neg.unicode().find("Ñil_−2(R)"), std::string::npos);
}

TEST(KReport, Psl2IndexSets) {
  const auto j = ktheory_report("psl2", std::nullopt, 4).to_json();
  EXPECT_EQ(j["index_sets"]["syllable_length"], 4);
  EXPECT_EQ(j["index_sets"]["M_C"].size() + j["index_sets"]["M_D"].size(), 2u);
  EXPECT_EQ(j["index_sets"]["M_C"][0], "ab");
  EXPECT_EQ(j["rhs"]["op"], "sum");
  EXPECT_EQ(j["rhs"]["children"][1]["op"], "indexed_sum");
}

TEST(KReport, GenericTargetUsesWaldhausenNil) {
  const auto r = ktheory_report("FIX-Q");
  EXPECT_NE(r.latex().find("R[G_1-F]"), std::string::npos);
  EXPECT_NE(r.unicode().find("Ñil_n−1"), std::string::npos);
}

TEST(KReport, FixG0MapsToWhiteheadDisplay) {
  EXPECT_EQ(normalize_latex(ktheory_report("FIX-G0").latex()), normalize_latex(golden("intro-wh-g0")));
}
