#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "semisplit/error.hpp"
#include "semisplit/fixture.hpp"
#include "semisplit/kreport.hpp"
#include "semisplit/kwitness.hpp"
#include "semisplit/literal.hpp"
#include "semisplit/nilcat.hpp"
#include "semisplit/random.hpp"
#include "semisplit/suite.hpp"
#include "semisplit/vcclass.hpp"

using namespace semisplit;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::uint64_t seed = 42;
  int samples = 100;
  int kmax = 64;
  std::vector<std::string> coeffs;
  std::vector<std::string> fixtures;
  std::string fixtures_dir;
  std::string out;
  bool timing = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::filesystem::path fixture_dir(const Options& o) {
  return o.fixtures_dir.empty() ? default_fixture_dir() : std::filesystem::path(o.fixtures_dir);
}

suite::Config make_config(const Options& o) {
  if (o.samples < 1) throw UsageError("--samples must be at least 1");
  if (o.kmax < 1) throw UsageError("--kmax must be at least 1");
  suite::Config cfg;
  cfg.seed = o.seed;
  cfg.samples = o.samples;
  cfg.kmax = o.kmax;
  cfg.timing = o.timing;
  cfg.fixtures_dir = fixture_dir(o);
  if (!o.coeffs.empty()) {
    cfg.coeffs.clear();
    for (const auto& c : o.coeffs) cfg.coeffs.push_back(CoeffRing::parse(c));
  }
  if (!o.fixtures.empty()) cfg.fixtures = o.fixtures;
  return cfg;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text << "\n";
}

int run_checks(const Options& o, const std::string& prefix) {
  const suite::Report rep = suite::run_suite(make_config(o), prefix);
  emit(o, rep.to_json().dump(2));
  for (const auto& r : rep.records)
    std::cerr << r.status << "  " << r.check << "  " << r.fixture << "  samples=" << r.samples_run
              << " failures=" << r.failure_count << "\n";
  return rep.pass() ? kExitPass : kExitFail;
}

std::vector<DinftyElem> parse_dinfty_gens(const std::string& text) {
  // "n,flip;n,flip;..."
  std::vector<DinftyElem> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    const auto comma = item.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument(item);
      const int flip = std::stoi(item.substr(comma + 1));
      if (flip != 0 && flip != 1) throw std::invalid_argument(item);
      out.push_back({std::stoll(item.substr(0, comma)), flip});
    } catch (const std::logic_error&) {
      throw UsageError("bad D-infinity element '" + item + "', expected n,flip");
    }
  }
  return out;
}

RingKind ring_kind_arg(const std::string& s) {
  static const std::map<std::string, RingKind> aliases{{"F", RingKind::GroupRingF},  {"G", RingKind::GroupRingG},
                                                       {"laurent", RingKind::Laurent}, {"laurent'", RingKind::LaurentPrime},
                                                       {"poly+", RingKind::PolyPlus}, {"poly-", RingKind::PolyMinus},
                                                       {"poly'+", RingKind::PolyPlusPrime},
                                                       {"poly'-", RingKind::PolyMinusPrime}};
  if (auto it = aliases.find(s); it != aliases.end()) return it->second;
  return parse_ring_kind(s);
}

std::optional<int> degree_arg(const std::string& s) {
  if (s.empty() || s == "n" || s == "*") return std::nullopt;
  try {
    std::size_t used = 0;
    const int d = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    if (d > 1) throw UsageError("--degree must be at most 1");
    return d;
  } catch (const std::logic_error&) {
    throw UsageError("bad degree '" + s + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of semi-splitting identities for groups over D-infinity", "semisplit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "Seed for all pseudorandom streams");
  app.add_option("--samples", o.samples, "Random samples per check");
  app.add_option("--kmax", o.kmax, "Nilpotency bound");
  app.add_option("--coeff", o.coeffs, "Coefficient ring: int or mod:m (repeatable)");
  app.add_option("--fixture", o.fixtures, "Fixture name or descriptor path (repeatable)");
  app.add_option("--fixtures-dir", o.fixtures_dir, "Directory holding FIX-*.json");
  app.add_option("--out", o.out, "Write the report here instead of stdout");
  app.add_flag("--timing", o.timing, "Include wall times in reports");

  std::function<int()> action;

  auto* validate = app.add_subcommand("validate", "Validate an amalgam descriptor");
  std::string file;
  validate->add_option("file", file)->required();
  validate->callback([&] {
    action = [&] {
      const AmalgamPtr G = load_amalgam_file(file);
      nlohmann::json j{{"name", G->name()},
                       {"F_finite_part", G->F().finite_elements().size()},
                       {"F_free_rank", G->F().free_rank()},
                       {"u", print_felem(G->u(), G->F())},
                       {"double_cosets_ok", double_cosets_are_cosets(*G, 1) && double_cosets_are_cosets(*G, 2)}};
      emit(o, j.dump(2));
      return kExitPass;
    };
  });

  auto* nf = app.add_subcommand("nf", "Normal form of a word in G");
  std::string fixture, word;
  nf->add_option("fixture", fixture)->required();
  nf->add_option("word", word)->required();
  nf->callback([&] {
    action = [&] {
      const AmalgamPtr G = resolve_fixture(fixture, fixture_dir(o));
      std::cout << print_group_word(parse_group_word(word, *G), G->F()) << "\n";
      return kExitPass;
    };
  });

  auto* ring = app.add_subcommand("ring", "Ring arithmetic");
  ring->require_subcommand(1);
  auto* ring_eval = ring->add_subcommand("eval", "Evaluate a ring literal to normal form");
  std::string expr, kind = "R[G]";
  ring_eval->add_option("fixture", fixture)->required();
  ring_eval->add_option("expr", expr)->required();
  ring_eval->add_option("--ring", kind, "F, G, laurent, laurent', poly+, poly-, poly'+, poly'- or a full ring name");
  ring_eval->callback([&] {
    action = [&] {
      const AmalgamPtr G = resolve_fixture(fixture, fixture_dir(o));
      const CoeffRing c = o.coeffs.empty() ? CoeffRing::integers() : CoeffRing::parse(o.coeffs.front());
      std::cout << print_ring_literal(parse_ring_literal(expr, RingTag{ring_kind_arg(kind), G, c})) << "\n";
      return kExitPass;
    };
  });

  const std::map<std::string, std::string> nil_checks{
      {"roundtrip", "nil.ji"}, {"sequences", "nil.sequences"}, {"nilpotency", "nil.twisted-power"}};
  auto* nil = app.add_subcommand("nil", "Nil-category verifications");
  nil->require_subcommand(1);
  for (const auto& [name, id] : nil_checks)
    nil->add_subcommand(name, suite::find_check(id).summary)->callback([&, id = id] {
      action = [&, id] { return run_checks(o, id); };
    });

  const std::map<std::string, std::string> k1_checks{{"sigma", "k1.sigma"},
                                                     {"induction", "k1.induction"},
                                                     {"transfer", "k1.transfer"},
                                                     {"scaling", "rings.scaling"}};
  auto* k1 = app.add_subcommand("k1", "K1 witness verifications");
  k1->require_subcommand(1);
  for (const auto& [name, id] : k1_checks)
    k1->add_subcommand(name, suite::find_check(id).summary)->callback([&, id = id] {
      action = [&, id] { return run_checks(o, id); };
    });

  auto* certify = k1->add_subcommand("certify", "Emit a sigma_A elimination certificate for a random object");
  std::string side = "t";
  certify->add_option("fixture", fixture)->required();
  certify->add_option("--side", side, "t or t'")->check(CLI::IsMember({"t", "t'"}));
  certify->callback([&] {
    action = [&] {
      const AmalgamPtr G = resolve_fixture(fixture, fixture_dir(o));
      const CoeffRing c = o.coeffs.empty() ? CoeffRing::integers() : CoeffRing::parse(o.coeffs.front());
      Rng rng(o.seed, "certify/" + G->name() + "/" + c.name());
      const NilA x = random_nilA(rng, RingTag{RingKind::GroupRingF, G, c}, Order::B1B2);
      const DiagonalReport r = diagonalize_sigmaA(x, side == "t" ? EliminationSide::T : EliminationSide::TPrime);
      emit(o, r.certificate.to_json().dump(2));
      return r.ok ? kExitPass : kExitFail;
    };
  });

  auto* replay = k1->add_subcommand("replay", "Replay an elimination certificate");
  std::string cert;
  replay->add_option("certificate", cert)->required();
  replay->callback([&] {
    action = [&] {
      std::ifstream in(cert);
      if (!in) throw UsageError("cannot read " + cert);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
      }
      const AmalgamPtr G = resolve_fixture(j.at("fixture").get<std::string>(), fixture_dir(o));
      const RingTag base{RingKind::GroupRingF, G, CoeffRing::parse(j.at("coeff").get<std::string>())};
      const ElementaryCertificate c = ElementaryCertificate::from_json(j, base);
      const bool ok = c.verify();
      std::cout << (ok ? "replay ok" : "replay mismatch") << ": " << c.ops.size() << " operations\n";
      return ok ? kExitPass : kExitFail;
    };
  });

  auto* vc = app.add_subcommand("vc", "Virtually cyclic subgroups and K-theory reports");
  vc->require_subcommand(1);
  auto* classify = vc->add_subcommand("classify", "Classify a PSL2(Z) word or a D-infinity subgroup");
  std::string target_word, dinfty;
  classify->add_option("word", target_word, "PSL2(Z) word over a, b, B");
  classify->add_option("--dinfty", dinfty, "D-infinity generators n,flip;n,flip;...");
  classify->callback([&] {
    action = [&] {
      if (!dinfty.empty()) {
        emit(o, classify_dinfty_subgroup(parse_dinfty_gens(dinfty)).to_json().dump(2));
      } else {
        const psl2::Word w = psl2::parse(target_word);
        nlohmann::json j = psl2::classify(w).to_json();
        j["normal_form"] = psl2::print(psl2::reduce(w));
        j["trace"] = psl2::trace(psl2::eval(w));
        emit(o, j.dump(2));
      }
      return kExitPass;
    };
  });

  auto* enumerate = vc->add_subcommand("enumerate", "Maximal virtually cyclic classes of PSL2(Z)");
  int length = 6;
  enumerate->add_option("--length", length, "Syllable length bound L");
  enumerate->callback([&] {
    action = [&] {
      std::string lines;
      for (const auto& c : psl2::enumerate_maximal_vc(length)) {
        nlohmann::json j{{"word", psl2::print(c.representative)},
                         {"type", psl2::to_string(c.max_vc)},
                         {"trace", psl2::trace(psl2::eval(c.representative))}};
        lines += j.dump() + "\n";
      }
      if (!lines.empty()) lines.pop_back();
      emit(o, lines);
      return kExitPass;
    };
  });

  auto* report = vc->add_subcommand("report", "Symbolic K-theory decomposition");
  std::string target = "dinfty", degree;
  bool as_json = false, as_unicode = false;
  report->add_option("--target", target, "dinfty, psl2, intro-dinfty, intro-psl2, intro-wh-g0 or a fixture");
  report->add_option("--degree", degree, "n, * or an integer at most 1");
  report->add_option("--length", length, "Enumeration length for the PSL2 index sets");
  report->add_flag("--json", as_json);
  report->add_flag("--unicode", as_unicode);
  report->callback([&] {
    action = [&] {
      const auto r = kreport::ktheory_report(target, degree_arg(degree), length);
      emit(o, as_json ? r.to_json().dump(2) : as_unicode ? r.unicode() : r.latex());
      return kExitPass;
    };
  });

  auto* suite_cmd = app.add_subcommand("suite", "Run verification suites");
  suite_cmd->require_subcommand(1);
  std::string prefix;
  auto* all = suite_cmd->add_subcommand("all", "Run every check");
  all->add_option("prefix", prefix, "Only checks whose id starts with this");
  all->callback([&] { action = [&] { return run_checks(o, prefix); }; });
  suite_cmd->add_subcommand("list", "List check ids")->callback([&] {
    action = [&] {
      for (const auto& c : suite::checks()) std::cout << c.id << "  " << c.summary << "\n";
      return kExitPass;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }
  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitFail;
  }
}
