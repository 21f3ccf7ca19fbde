#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "semisplit/error.hpp"
#include "semisplit/literal.hpp"
#include "semisplit/random.hpp"
#include "support.hpp"

using namespace semisplit;
using testsupport::fixture;
using testsupport::kFixtures;

namespace {

GroupWord nf(const Amalgam& G, const std::string& text) { return parse_group_word(text, G); }

FElem named(const Amalgam& G, const std::string& n) { return FElem{G.names().at(n), {}}; }

// Left action of G on normal forms, written independently of Amalgam::mul.
struct LeftAction {
  const Amalgam& G;
  GroupWord elem(const FElem& g, GroupWord w) const {
    FElem x = g;
    for (std::uint8_t l : w.letters) x = G.alpha_letter(l).apply(x);
    w.tail = G.F().mul(x, w.tail);
    return w;
  }
  GroupWord letter(int i, GroupWord w) const {
    if (!w.letters.empty() && w.letters.front() == i) {
      w.letters.erase(w.letters.begin());
      return elem(G.s(i), w);
    }
    w.letters.insert(w.letters.begin(), static_cast<std::uint8_t>(i));
    return w;
  }
  GroupWord token(const RawToken& t, GroupWord w) const {
    if (t.kind == RawToken::Kind::Element) return elem(t.f, w);
    for (int e = t.exponent; e > 0; --e) w = letter(t.letter, w);
    for (int e = t.exponent; e < 0; ++e) w = letter(t.letter, elem(G.F().inv(G.s(t.letter)), w));
    return w;
  }
  GroupWord eval(const std::vector<RawToken>& toks) const {
    GroupWord w;
    for (auto it = toks.rbegin(); it != toks.rend(); ++it) w = token(*it, w);
    return w;
  }
};

std::vector<GroupWord> words_up_to(const Amalgam& G, std::size_t max_letters) {
  std::vector<GroupWord> out;
  std::vector<std::vector<std::uint8_t>> layers{{}};
  for (std::size_t len = 0; len <= max_letters; ++len) {
    std::vector<std::vector<std::uint8_t>> next;
    for (const auto& L : layers) {
      for (const FElem& f : G.F().ball(1)) out.push_back({L, f});
      for (std::uint8_t l : {1, 2})
        if (L.empty() || L.back() != l) {
          auto M = L;
          M.push_back(l);
          next.push_back(M);
        }
    }
    layers = std::move(next);
  }
  return out;
}

}  // namespace

TEST(Groups, FixturesLoad) {
  for (const char* name : kFixtures) EXPECT_NO_THROW(fixture(name)) << name;
}

TEST(Groups, InvalidDescriptorsRejected) {
  const std::string dir = std::string(SEMISPLIT_FIXTURE_DIR) + "/invalid/";
  EXPECT_THROW(load_amalgam_file(dir + "FIX-Q-s1-trivial.json"), SquareRelationFails);
  EXPECT_THROW(load_amalgam_file(dir + "square-relation.json"), SquareRelationFails);
  EXPECT_THROW(load_amalgam_file(dir + "fixed-point.json"), FixedPointFails);
  EXPECT_THROW(load_amalgam_file(dir + "not-a-group.json"), NotAGroup);
  EXPECT_THROW(load_amalgam_file(dir + "not-an-automorphism.json"), NotAnAutomorphism);
  EXPECT_THROW(load_amalgam(nlohmann::json::parse("{\"F\": 3}")), ParseError);
}

TEST(Groups, PermutationGeneratorsGiveS3) {
  const auto G = fixture("FIX-N");
  EXPECT_EQ(G->F().finite_order(), 6);
  EXPECT_NE(G->alpha(), GroupAut::identity(G->F()));
}

TEST(Groups, DihedralExamples) {
  const auto G = fixture("FIX-D");
  EXPECT_EQ(nf(*G, "T1 T1"), G->identity());
  EXPECT_EQ(nf(*G, "T2 T1 T2").letters, (std::vector<std::uint8_t>{2, 1, 2}));
  EXPECT_EQ(G->bar_convert(nf(*G, "T1 T2 T1 T2")), (BarElement{2, {}}));
  EXPECT_EQ(G->bar_convert(nf(*G, "T2 T1")), (BarElement{-1, {}}));
  EXPECT_THROW(G->bar_convert(nf(*G, "T1")), NotInBarSubgroup);
  EXPECT_EQ(G->project(G->t()), (DinftyElem{1, 0}));
}

TEST(Groups, TwistedPushThrough) {
  const auto G = fixture("FIX-S");
  const FElem w = named(*G, "w");
  const GroupWord lhs = nf(*G, "w T1");
  EXPECT_EQ(lhs.letters, (std::vector<std::uint8_t>{1}));
  EXPECT_EQ(lhs.tail, G->F().inv(w));
  EXPECT_EQ(nf(*G, "T2 T2"), G->element(w));
  EXPECT_EQ(nf(*G, "T1^-1"), G->letter(1));
}

TEST(Groups, StructuralElementU) {
  EXPECT_EQ(fixture("FIX-D")->u(), FElem{});
  const auto Q = fixture("FIX-Q");
  EXPECT_EQ(Q->u(), named(*Q, "s"));
  const auto S = fixture("FIX-S");
  EXPECT_EQ(S->u(), named(*S, "w"));
  for (const char* name : kFixtures) {
    const auto G = fixture(name);
    const GroupWord tt = G->mul(G->t(), G->t_prime());
    EXPECT_EQ(G->inverse(tt), G->element(G->u())) << name;
    for (const FElem& x : G->F().finite_elements())
      EXPECT_EQ(G->alpha_prime().apply(x),
                G->F().mul(G->F().mul(G->u(), G->alpha_inv().apply(x)), G->F().inv(G->u())))
          << name;
  }
}

TEST(Groups, NormalFormIdempotentAndMultiplicative) {
  for (const char* name : kFixtures) {
    const auto G = fixture(name);
    Rng rng(7, std::string("nf/") + name);
    for (int i = 0; i < 1000; ++i) {
      const auto ta = random_tokens(rng, *G, 8);
      const auto tb = random_tokens(rng, *G, 8);
      const GroupWord a = G->normal_form(ta), b = G->normal_form(tb);
      auto tab = ta;
      tab.insert(tab.end(), tb.begin(), tb.end());
      ASSERT_EQ(G->normal_form(tab), G->mul(a, b)) << name;
      // Re-normalizing a normal form is the identity.
      std::vector<RawToken> re;
      for (auto l : a.letters) re.push_back(RawToken::t(l));
      re.push_back(RawToken::elem(a.tail));
      ASSERT_EQ(G->normal_form(re), a);
      ASSERT_EQ(G->mul(a, G->inverse(a)), G->identity());
      for (std::size_t k = 1; k < a.letters.size(); ++k) ASSERT_NE(a.letters[k], a.letters[k - 1]);
    }
  }
}

TEST(Groups, LeftActionSatisfiesRelations) {
  // If the generators act on normal forms compatibly with the defining relations,
  // the action factors through G and distinct normal forms are distinct elements.
  for (const char* name : kFixtures) {
    const auto G = fixture(name);
    const LeftAction act{*G};
    const auto& F = G->F();
    std::vector<FElem> gens = F.finite_elements();
    for (int k = 0; k < F.free_rank(); ++k) gens.push_back(F.lattice_generator(k));
    for (const GroupWord& w : words_up_to(*G, 4)) {
      for (int i : {1, 2}) {
        ASSERT_EQ(act.letter(i, act.letter(i, w)), act.elem(G->s(i), w)) << name;
        for (const FElem& f : gens)
          ASSERT_EQ(act.elem(f, act.letter(i, w)), act.letter(i, act.elem(G->alpha_letter(i).apply(f), w)));
      }
      for (const FElem& f : gens)
        for (const FElem& g : gens) ASSERT_EQ(act.elem(f, act.elem(g, w)), act.elem(F.mul(f, g), w));
      ASSERT_EQ(act.elem(F.identity(), w), w);
    }
  }
}

TEST(Groups, UniquenessExhaustiveShortWords) {
  for (const char* name : {"FIX-D", "FIX-Q", "FIX-S", "FIX-N"}) {
    const auto G = fixture(name);
    const LeftAction act{*G};
    std::vector<RawToken> alphabet{RawToken::t(1), RawToken::t(2), RawToken::t(1, -1), RawToken::t(2, -1)};
    for (const FElem& f : G->F().finite_elements())
      if (f.idx != 0) alphabet.push_back(RawToken::elem(f));
    const std::size_t max_len = alphabet.size() > 6 ? 4 : 6;
    std::vector<RawToken> toks;
    std::size_t checked = 0;
    std::function<void()> rec = [&] {
      ASSERT_EQ(G->normal_form(toks), act.eval(toks));
      ++checked;
      if (toks.size() == max_len) return;
      for (const RawToken& t : alphabet) {
        toks.push_back(t);
        rec();
        toks.pop_back();
      }
    };
    rec();
    EXPECT_GT(checked, 1000u) << name;
  }
}

TEST(Groups, BarSubgroup) {
  for (const char* name : kFixtures) {
    const auto G = fixture(name);
    Rng rng(11, std::string("bar/") + name);
    for (int i = 0; i < 500; ++i) {
      const BarElement a{rng.uniform(-3, 3), random_felem(rng, G->F())};
      const BarElement b{rng.uniform(-3, 3), random_felem(rng, G->F())};
      const BarElement c{rng.uniform(-3, 3), random_felem(rng, G->F())};
      ASSERT_EQ(G->bar_mul(G->bar_mul(a, b), c), G->bar_mul(a, G->bar_mul(b, c)));
      ASSERT_EQ(G->from_bar(G->bar_mul(a, b)), G->mul(G->from_bar(a), G->from_bar(b)));
      ASSERT_EQ(G->bar_convert(G->from_bar(a)), a);
      ASSERT_EQ(G->project(G->from_bar(a)), (DinftyElem{a.n, 0}));
    }
  }
}

TEST(Groups, ProjectionIsHomomorphism) {
  for (const char* name : kFixtures) {
    const auto G = fixture(name);
    Rng rng(5, std::string("proj/") + name);
    EXPECT_EQ(G->project(G->letter(1)), (DinftyElem{0, 1}));
    for (int i = 0; i < 300; ++i) {
      const GroupWord a = random_word(rng, *G, 8), b = random_word(rng, *G, 8);
      ASSERT_EQ(G->project(G->mul(a, b)), G->project(a) * G->project(b));
    }
  }
}

TEST(Groups, AlphaPrimeRelationExhaustive) {
  for (const char* name : kFixtures) {
    const auto G = fixture(name);
    const auto& F = G->F();
    for (const FElem& x : F.ball(1)) {
      // alpha(x) = t^-1 x t inside G
      const GroupWord conj = G->mul(G->mul(G->inverse(G->t()), G->element(x)), G->t());
      ASSERT_EQ(conj, G->element(G->alpha().apply(x))) << name;
      const GroupWord conjp = G->mul(G->mul(G->inverse(G->t_prime()), G->element(x)), G->t_prime());
      ASSERT_EQ(conjp, G->element(G->alpha_prime().apply(x))) << name;
    }
  }
}

TEST(Groups, DinftyLaw) {
  const DinftyElem r{0, 1}, s{-1, 1};
  EXPECT_EQ(r * r, DinftyElem{});
  EXPECT_EQ(s * s, DinftyElem{});
  EXPECT_EQ(r * s, (DinftyElem{1, 0}));
  EXPECT_EQ((r * s).inverse(), (DinftyElem{-1, 0}));
}
