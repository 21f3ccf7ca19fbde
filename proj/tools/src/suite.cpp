#include "semisplit/suite.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "semisplit/error.hpp"
#include "semisplit/exactness.hpp"
#include "semisplit/fixture.hpp"
#include "semisplit/kwitness.hpp"
#include "semisplit/literal.hpp"
#include "semisplit/nilcat.hpp"
#include "semisplit/vcclass.hpp"

namespace semisplit::suite {

namespace {

constexpr std::size_t kStoredFailures = 5;

RingTag base_tag(const Context& c, CoeffRing coeff) { return {RingKind::GroupRingF, c.amalgam(), coeff}; }

void check_structural(Context& c) {
  const Amalgam& G = *c.amalgam();
  static const std::map<std::string, std::string> golden_u{{"FIX-D", ""}, {"FIX-Q", "s"}, {"FIX-S", "w"}};
  c.sample("-", [&] {
    if (auto it = golden_u.find(G.name()); it != golden_u.end()) {
      const FElem want = it->second.empty() ? FElem{} : FElem{G.names().at(it->second), {}};
      c.witness = {{"u", print_felem(G.u(), G.F())}, {"expected", print_felem(want, G.F())}};
      c.expect(G.u() == want, "u differs from the recorded value");
    }
    c.expect(G.inverse(G.mul(G.t(), G.t_prime())) == G.element(G.u()), "u is not (t t')^-1");
  });
  for (const FElem& x : G.F().finite_elements())
    c.sample("-", [&] {
      c.witness = {{"x", print_felem(x, G.F())}};
      const FElem rhs = G.F().mul(G.F().mul(G.u(), G.alpha_inv().apply(x)), G.F().inv(G.u()));
      c.expect(G.alpha_prime().apply(x) == rhs, "alpha'(x) != u alpha^-1(x) u^-1");
      const GroupWord conj = G.mul(G.mul(G.inverse(G.t()), G.element(x)), G.t());
      c.expect(conj == G.element(G.alpha().apply(x)), "t^-1 x t != alpha(x)");
    });
}

void check_double_cosets(Context& c) {
  for (int letter : {1, 2})
    c.sample("-", [&] {
      c.witness = {{"letter", letter}};
      c.expect(double_cosets_are_cosets(*c.amalgam(), letter), "double coset is not a finite union of cosets");
    });
}

void check_ji(Context& c) {
  const int kmax = c.config().kmax;
  for (CoeffRing coeff : c.config().coeffs) {
    const RingTag T = base_tag(c, coeff);
    Rng rng = c.rng("ji/" + coeff.name());
    for (int i = 0; i < c.config().samples; ++i)
      c.sample(coeff.name(), [&] {
        const NilB y = random_nilB(rng, T, Twist::Alpha);
        c.witness = to_json(y);
        require_nilpotent(y, kmax);
        c.expect(functor_j(functor_i(y)) == y, "j(i(y)) != y");
        const NilB yp = random_nilB(rng, T, Twist::AlphaPrime);
        c.witness = to_json(yp);
        c.expect(functor_jprime(functor_iprime(yp)) == yp, "j'(i'(y)) != y");
        const NilA x = random_nilA(rng, T, Order::B1B2);
        c.witness = to_json(x);
        require_nilpotent(x, kmax);
        c.expect(functor_i(functor_j(x)) == build_proof_objects(x).x2, "i(j(x)) != x''");
      });
  }
}

void check_twisted_power(Context& c) {
  const int kmax = c.config().kmax;
  for (CoeffRing coeff : c.config().coeffs) {
    const RingTag T = base_tag(c, coeff);
    const GroupAut id = GroupAut::identity(c.amalgam()->F());
    Rng rng = c.rng("tp/" + coeff.name());
    for (int i = 0; i < c.config().samples; ++i)
      c.sample(coeff.name(), [&] {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 4);
        const RingMatrix M = random_matrix(rng, T, n, n, 3);
        c.witness = {{"M", M.to_literals()}};
        RingMatrix P = RingMatrix::identity(T, n);
        for (int k = 1; k <= 4; ++k) {
          P = P * M;
          c.expect(twisted_power(M, id, k) == P, "untwisted TP_" + std::to_string(k) + " != M^k");
        }
        const NilA x = random_nilA(rng, T, i % 2 ? Order::B2B1 : Order::B1B2);
        c.witness = to_json(x);
        const NilAPairResult r = nilpotency_check(x, kmax);
        c.expect(r.certified(), "composites do not certify together");
        const NilpotencyResult via = nilpotency_check(x.order == Order::B1B2 ? functor_j(x) : functor_jprime(x), kmax);
        c.expect(via.degree == r.composite.degree, "composite degree differs from functor_j output");
      });
  }
  if (c.amalgam()->name() == "FIX-S")
    c.sample("mod:3", [&] {
      const RingTag T = base_tag(c, CoeffRing::mod(3));
      const NilB y{Twist::Alpha, RingMatrix::from_literals(T, {{"1 - w"}})};
      c.witness = to_json(y);
      c.expect(require_nilpotent(y, kmax) == 3, "twisted degree of 1 - w is not 3");
    });
}

void check_sequences(Context& c) {
  if (!c.amalgam()->F().is_finite()) {
    c.skip("exactness uses the regular representation of a finite F");
    return;
  }
  for (CoeffRing coeff : c.config().coeffs) {
    const RingTag T = base_tag(c, coeff);
    Rng rng = c.rng("exact/" + coeff.name());
    for (int i = 0; i < c.config().samples; ++i)
      c.sample(coeff.name(), [&] {
        const NilA x = random_nilA(rng, T, Order::B1B2);
        c.witness = to_json(x);
        for (const ShortSequence& s : proof_sequences(build_proof_objects(x))) {
          const ExactnessReport r = check_exact(s);
          if (!r.exact()) {
            c.witness["verdict"] = r.first_failure()->component + "/" + r.first_failure()->position;
            c.expect(false, r.first_failure()->detail);
          }
        }
      });
  }
}

void check_scaling(Context& c) {
  const AmalgamPtr& G = c.amalgam();
  const std::pair<RingKind, RingKind> pairs[] = {{RingKind::PolyMinus, RingKind::PolyPlusPrime},
                                                 {RingKind::PolyPlus, RingKind::PolyMinusPrime},
                                                 {RingKind::Laurent, RingKind::LaurentPrime}};
  for (CoeffRing coeff : c.config().coeffs) {
    Rng rng = c.rng("beta/" + coeff.name());
    for (int i = 0; i < 10 * c.config().samples; ++i)
      c.sample(coeff.name(), [&] {
        const auto [src, dst] = pairs[i % 3];
        const RingElem a = random_ring_elem(rng, {src, G, coeff}, 3, 3);
        const RingElem b = random_ring_elem(rng, {src, G, coeff}, 3, 3);
        c.witness = {{"a", print_ring_literal(a)}, {"b", print_ring_literal(b)}, {"ring", to_string(src)}};
        const RingElem ba = beta_u(a);
        c.expect(ba.tag().kind == dst, "beta_u lands in the wrong ring");
        c.expect(beta_u(a * b) == ba * beta_u(b), "beta_u not multiplicative");
        c.expect(beta_u(a + b) == ba + beta_u(b), "beta_u not additive");
        c.expect(beta_u_inverse(ba) == a, "beta_u^-1 beta_u != id");
        const RingElem m = random_ring_elem(rng, {RingKind::PolyMinus, G, coeff}, 3, 3);
        const RingElem p = random_ring_elem(rng, {RingKind::PolyPlus, G, coeff}, 3, 3);
        const RingElem l = random_ring_elem(rng, {RingKind::Laurent, G, coeff}, 3, 3);
        c.witness = {{"m", print_ring_literal(m)}, {"p", print_ring_literal(p)}, {"l", print_ring_literal(l)}};
        c.expect(beta_u(embed(m, Inclusion::PsiMinus)) == embed(beta_u(m), Inclusion::PsiPlusPrime),
                 "psi- square fails");
        c.expect(beta_u(embed(p, Inclusion::PsiPlus)) == embed(beta_u(p), Inclusion::PsiMinusPrime),
                 "psi+ square fails");
        c.expect(embed(l, Inclusion::Theta) == embed(beta_u(l), Inclusion::ThetaPrime), "theta square fails");
      });
    const RingTag T = base_tag(c, coeff);
    Rng wrng = c.rng("scaling-witness/" + coeff.name());
    for (int i = 0; i < c.config().samples; ++i)
      c.sample(coeff.name(), [&] {
        const NilB m = random_nilB(wrng, T, Twist::AlphaInv), p = random_nilB(wrng, T, Twist::Alpha);
        c.witness = {{"minus", to_json(m)}, {"plus", to_json(p)}};
        verify_scaling_witness(m, Scaling::BetaPlus);
        verify_scaling_witness(p, Scaling::BetaMinus);
        verify_scaling_combined(p, m);
      });
  }
}

void check_sigma(Context& c) {
  for (CoeffRing coeff : c.config().coeffs) {
    const RingTag T = base_tag(c, coeff);
    Rng rng = c.rng("sigma/" + coeff.name());
    for (int i = 0; i < c.config().samples; ++i)
      c.sample(coeff.name(), [&] {
        const NilA x = random_nilA(rng, T, Order::B1B2);
        c.witness = to_json(x);
        const auto reps = verify_sigmaA_diagonalization(x);
        c.expect(reps[0].D == theta_image(sigma_B(functor_j(x)).matrix()), "t-side block != theta sigma_B(j x)");
        c.expect(reps[1].D == theta_image(sigma_B(functor_jprime(x)).matrix()),
                 "t'-side block != theta' sigma_B(j' x)");
        c.expect(reps[0].certificate.verify() && reps[1].certificate.verify(), "sigma_A certificate does not replay");
      });
  }
}

void check_transfer(Context& c) {
  for (CoeffRing coeff : c.config().coeffs) {
    const RingTag T = base_tag(c, coeff);
    Rng rng = c.rng("transfer/" + coeff.name());
    for (int i = 0; i < c.config().samples; ++i)
      c.sample(coeff.name(), [&] {
        const NilA x = random_nilA(rng, T, Order::B1B2);
        c.witness = to_json(x);
        const TransferReport t = verify_transfer_diagonalization(x);
        c.expect(t.certificate.verify(), "transfer certificate does not replay");
      });
  }
}

void check_induction(Context& c) {
  for (CoeffRing coeff : c.config().coeffs) {
    const RingTag T = base_tag(c, coeff);
    Rng rng = c.rng("induction/" + coeff.name());
    for (int i = 0; i < c.config().samples; ++i)
      c.sample(coeff.name(), [&] {
        const NilB y = random_nilB(rng, T, Twist::Alpha);
        c.witness = to_json(y);
        c.expect(verify_induction_key(y).verify(), "induction certificate does not replay");
        const NilB z = random_nilB(rng, T, Twist::AlphaInv);
        c.witness = to_json(z);
        c.expect(verify_induction_second_branch(z).verify(), "second-branch certificate does not replay");
      });
  }
}

nlohmann::json gens_json(const std::vector<DinftyElem>& gens) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& g : gens) j.push_back({g.n, g.flip});
  return j;
}

void check_dinfty(Context& c) {
  std::vector<DinftyElem> elems;
  for (std::int64_t n = -8; n <= 8; ++n)
    for (int f = 0; f < 2; ++f) elems.push_back({n, f});
  const int max_gens = c.config().dinfty_max_generators;
  std::map<std::string, int> kinds;
  std::vector<DinftyElem> gens;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    c.sample("-", [&] {
      c.witness = gens_json(gens);
      const DinftySubgroup s = classify_dinfty_subgroup(gens);
      ++kinds[to_string(s.kind)];
      const auto ball = dinfty_ball_closure(gens, 20);
      for (std::int64_t n = -12; n <= 12; ++n)
        for (int f = 0; f < 2; ++f) {
          const DinftyElem g{n, f};
          if (s.contains(g) != (ball.count(g) > 0)) {
            c.witness["element"] = {n, f};
            c.expect(false, "classifier membership differs from the ball oracle");
            return;
          }
        }
      const bool fin = family_membership(s, Family::Fin), fbc = family_membership(s, Family::Fbc),
                 vc = family_membership(s, Family::Vc);
      c.expect((!fin || fbc) && (!fbc || vc) && vc, "family inclusion fin < fbc < vc violated");
    });
    if (gens.size() == static_cast<std::size_t>(max_gens)) return;
    for (std::size_t i = from; i < elems.size(); ++i) {
      gens.push_back(elems[i]);
      rec(i);
      gens.pop_back();
    }
  };
  rec(0);
  c.info()["kinds"] = kinds;
  c.info()["max_generators"] = max_gens;
}

void check_psl2(Context& c) {
  namespace p = psl2;
  Rng rng = c.rng("words");
  auto random_word = [&](int max_len) {
    p::Word w;
    const auto len = rng.uniform(0, max_len);
    bool a_next = rng.chance(1, 2);
    for (std::int64_t i = 0; i < len; ++i, a_next = !a_next)
      w.push_back(a_next ? 1 : static_cast<std::uint8_t>(rng.uniform(2, 3)));
    return w;
  };
  for (int i = 0; i < 10 * c.config().samples; ++i)
    c.sample("-", [&] {
      const p::Word w = random_word(12), v = random_word(12);
      c.witness = {{"w", p::print(w)}, {"v", p::print(v)}};
      c.expect(p::normal_form(p::eval(w)) == w, "normal form round trip fails");
      c.expect(p::same_element(p::eval(p::concat(w, v)), p::multiply(p::eval(w), p::eval(v))),
               "eval is not a homomorphism");
      const p::Classification cl = p::classify(w);
      if (cl.type != p::Type::Hyperbolic) return;
      p::Word pw;
      for (std::size_t k = 1; k <= 5; ++k) {
        pw = p::concat(pw, w);
        c.expect(p::classify(pw).translation_length == k * cl.translation_length, "translation length not linear");
      }
    });
  for (const p::Word& w : p::all_words(12))
    c.sample("-", [&] {
      c.witness = {{"w", p::print(w)}};
      const p::Classification cl = p::classify(w);
      const auto tr = std::llabs(p::trace(p::eval(w)));
      switch (cl.type) {
        case p::Type::Identity: c.expect(p::same_element(p::eval(w), {1, 0, 0, 1}), "identity misclassified"); break;
        case p::Type::Elliptic: c.expect(tr <= 1, "elliptic with |trace| >= 2"); break;
        case p::Type::Hyperbolic: c.expect(tr >= 2 && cl.translation_length >= 1, "hyperbolic with |trace| <= 1"); break;
      }
      if (cl.type == p::Type::Hyperbolic && w.size() <= 6) {
        const bool found = p::find_conjugator(w, p::inverse(w), w.size() + 4).has_value();
        c.expect(found == (cl.max_vc == p::MaxVC::Dihedral), "dihedral detection differs from brute force");
      }
    });
  std::vector<std::size_t> counts;
  for (int L = 1; L <= 8; ++L) counts.push_back(p::enumerate_maximal_vc(L).size());
  c.info()["enumeration_counts"] = counts;
  // Hyperbolic cyclic words have even syllable length, so only even steps can grow.
  c.sample("-", [&] {
    c.witness = {{"counts", counts}};
    for (std::size_t L = 2; L + 2 <= 8; L += 2)
      c.expect(counts[L + 1] > counts[L - 1], "count does not grow from L=" + std::to_string(L));
  });
}

std::vector<Check> make_checks() {
  std::vector<Check> v{
      {"groups.double-cosets", "double cosets of F in G_i are finite unions of left cosets", true, check_double_cosets},
      {"groups.structural", "u = (t t')^-1 and alpha' = c_u alpha^-1 over F0", true, check_structural},
      {"k1.induction", "induction key equality and its t'-side branch", true, check_induction},
      {"k1.sigma", "sigma_A diagonalization on both sides", true, check_sigma},
      {"k1.transfer", "transfer diagonalization of sigma_A", true, check_transfer},
      {"nil.ji", "j i = 1 and i j = x''", true, check_ji},
      {"nil.sequences", "exactness of both functor sequences", true, check_sequences},
      {"nil.twisted-power", "twisted powers and nilpotency certification", true, check_twisted_power},
      {"rings.scaling", "beta_u isomorphisms, commuting squares and witness equations", true, check_scaling},
      {"vc.dinfty", "D-infinity subgroup classifier against the ball oracle", false, check_dinfty},
      {"vc.psl2", "PSL2(Z) normal forms, classification and enumeration", false, check_psl2},
  };
  std::sort(v.begin(), v.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  return v;
}

}  // namespace

Context::Context(const Config& cfg, std::string check, AmalgamPtr G, Record& rec)
    : cfg_(cfg), check_(std::move(check)), G_(std::move(G)), rec_(rec) {}

Rng Context::rng(const std::string& label) const { return Rng(cfg_.seed, check_ + "/" + rec_.fixture + "/" + label); }

void Context::sample(const std::string& coeff, const std::function<void()>& body) {
  coeff_ = coeff;
  current_ = rec_.samples_run++;
  witness = nullptr;
  try {
    body();
  } catch (const std::exception& e) {
    fail(e.what());
  }
}

void Context::expect(bool ok, const std::string& message) {
  if (!ok) fail(message);
}

void Context::skip(const std::string& reason) {
  rec_.status = "skipped";
  rec_.info["reason"] = reason;
}

void Context::fail(const std::string& message) {
  ++rec_.failure_count;
  if (rec_.failures.size() < kStoredFailures) rec_.failures.push_back({current_, coeff_, message, witness});
}

nlohmann::json Record::to_json(bool timing) const {
  nlohmann::json j{{"check", check},        {"fixture", fixture}, {"status", status},
                   {"samples", samples_run}, {"failures", failure_count}};
  if (!failures.empty()) {
    nlohmann::json f = nlohmann::json::array();
    for (const auto& x : failures)
      f.push_back({{"sample", x.sample}, {"coeff", x.coeff}, {"message", x.message}, {"witness", x.witness}});
    j["witnesses"] = f;
  }
  if (!info.empty()) j["info"] = info;
  if (timing) j["wall_seconds"] = wall_seconds;
  return j;
}

const std::vector<Check>& checks() {
  static const std::vector<Check> all = make_checks();
  return all;
}

const Check& find_check(const std::string& id) {
  for (const Check& c : checks())
    if (c.id == id) return c;
  throw ParseError("unknown check '" + id + "'");
}

Record run_check(const Check& check, const std::string& fixture, const Config& cfg) {
  Record rec;
  rec.check = check.id;
  rec.fixture = check.per_fixture ? fixture : "-";
  AmalgamPtr G;
  if (check.per_fixture) {
    G = resolve_fixture(fixture, cfg.fixtures_dir.empty() ? default_fixture_dir() : cfg.fixtures_dir);
    rec.fixture = G->name();
  }
  Context ctx(cfg, check.id, G, rec);
  const auto start = std::chrono::steady_clock::now();
  check.body(ctx);
  rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (rec.status.empty()) rec.status = rec.failure_count ? "fail" : "pass";
  return rec;
}

bool Report::pass() const {
  return std::all_of(records.begin(), records.end(), [](const Record& r) { return r.status != "fail"; });
}

nlohmann::json Report::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : config.coeffs) coeffs.push_back(c.name());
  nlohmann::json recs = nlohmann::json::array();
  int failures = 0;
  for (const auto& r : records) {
    recs.push_back(r.to_json(config.timing));
    failures += r.failure_count;
  }
  return {{"schema", kReportSchema},
          {"config",
           {{"seed", config.seed},
            {"samples", config.samples},
            {"kmax", config.kmax},
            {"coeffs", coeffs},
            {"fixtures", config.fixtures}}},
          {"verdict", pass() ? "pass" : "fail"},
          {"failures", failures},
          {"records", recs}};
}

Report run_suite(const Config& cfg, const std::string& prefix) {
  Report rep;
  rep.config = cfg;
  for (const Check& c : checks()) {
    if (c.id.rfind(prefix, 0) != 0) continue;
    if (!c.per_fixture) {
      rep.records.push_back(run_check(c, "-", cfg));
      continue;
    }
    for (const std::string& f : cfg.fixtures) rep.records.push_back(run_check(c, f, cfg));
  }
  std::stable_sort(rep.records.begin(), rep.records.end(), [](const Record& a, const Record& b) {
    return std::tie(a.check, a.fixture) < std::tie(b.check, b.fixture);
  });
  return rep;
}

}  // namespace semisplit::suite
