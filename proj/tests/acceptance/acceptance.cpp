// Acceptance driver: one line per criterion, exit 0 iff every selected criterion passes.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "semisplit/kreport.hpp"
#include "semisplit/suite.hpp"
#include "semisplit/vcclass.hpp"

using namespace semisplit;

namespace {

// Tolerances: every identity is exact, so the only tolerances are the wall-clock bounds.
constexpr double kBound1 = 30, kBound2 = 60, kBound3 = 30, kBound4 = 1, kBound5 = 30, kBound6 = 60, kBound7 = 60,
                 kBound8 = 1, kBound9 = 30, kBound10 = 120, kBound11 = 5, kBound12 = 120;
constexpr int kMaxFailures = 0;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double bound_seconds;
  std::function<Outcome()> run;
};

suite::Config config(std::vector<std::string> fixtures, int samples) {
  suite::Config c;
  c.seed = 42;
  c.samples = samples;
  c.fixtures = std::move(fixtures);
  c.fixtures_dir = SEMISPLIT_FIXTURE_DIR;
  return c;
}

const std::vector<std::string> kAll{"FIX-D", "FIX-Q", "FIX-S", "FIX-G0", "FIX-N"};

Outcome from_checks(const suite::Config& cfg, const std::vector<std::string>& ids) {
  Outcome o;
  int samples = 0, failures = 0;
  std::ostringstream first;
  for (const auto& id : ids)
    for (const auto& r : suite::run_suite(cfg, id).records) {
      if (r.check != id) continue;
      samples += r.samples_run;
      failures += r.failure_count;
      if (r.status == "skipped") {
        o.ok = false;
        first << " " << r.check << "/" << r.fixture << " skipped";
      }
      if (r.failure_count && first.str().empty())
        first << " first failure " << r.check << "/" << r.fixture << ": " << r.failures.front().message << " "
              << r.failures.front().witness.dump();
    }
  o.ok = o.ok && failures <= kMaxFailures && samples > 0;
  o.detail = std::to_string(samples) + " samples, " + std::to_string(failures) + " failures" + first.str();
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome psl2_outcome() {
  Outcome o = from_checks(config({}, 100), {"vc.psl2"});
  std::vector<std::size_t> counts;
  for (int L = 2; L <= 8; ++L) counts.push_back(psl2::enumerate_maximal_vc(L).size());
  std::string list;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    list += (i ? "," : "") + std::to_string(counts[i]);
    if (i && counts[i] <= counts[i - 1]) {
      o.ok = false;
      o.detail += "; count does not increase from L=" + std::to_string(i + 1) + " to L=" + std::to_string(i + 2);
    }
  }
  o.detail += "; counts L=2..8: " + list;
  return o;
}

Outcome golden_outcome() {
  Outcome o;
  int matched = 0;
  for (const auto& t : kreport::report_targets()) {
    const std::string want = slurp(std::filesystem::path(SEMISPLIT_GOLDEN_DIR) / (t + ".tex"));
    const std::string got = kreport::ktheory_report(t).latex();
    if (!want.empty() && kreport::normalize_latex(got) == kreport::normalize_latex(want)) {
      ++matched;
    } else {
      o.ok = false;
      o.detail += " mismatch " + t + ": " + got;
    }
  }
  o.detail = std::to_string(matched) + "/" + std::to_string(kreport::report_targets().size()) + " displays" + o.detail;
  return o;
}

Outcome determinism_outcome() {
  const auto dir = std::filesystem::temp_directory_path() / ("semisplit-accept-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::string reports[2];
  for (int i = 0; i < 2; ++i) {
    const auto out = dir / ("run" + std::to_string(i) + ".json");
    const std::string cmd = std::string("\"") + SEMISPLIT_CLI + "\" suite all --seed 42 --out \"" + out.string() +
                            "\" 2>/dev/null";
    if (std::system(cmd.c_str()) != 0) {
      std::filesystem::remove_all(dir);
      return {false, "suite all exited nonzero"};
    }
    reports[i] = slurp(out);
  }
  std::filesystem::remove_all(dir);
  const bool same = !reports[0].empty() && reports[0] == reports[1];
  return {same, std::to_string(reports[0].size()) + " bytes, " + (same ? "identical" : "different")};
}

std::vector<Criterion> criteria() {
  return {
      {1, "functor round trip j i = 1 and i j = x''", kBound1,
       [] { return from_checks(config({"FIX-D", "FIX-Q", "FIX-S", "FIX-G0"}, 200), {"nil.ji"}); }},
      {2, "exactness of both functor sequences", kBound2,
       [] { return from_checks(config({"FIX-D", "FIX-Q", "FIX-S"}, 50), {"nil.sequences"}); }},
      {3, "twisted powers, golden degree, joint certification", kBound3,
       [] { return from_checks(config(kAll, 200), {"nil.twisted-power"}); }},
      {4, "structural element u and the alpha' relation", kBound4,
       [] { return from_checks(config(kAll, 1), {"groups.structural"}); }},
      {5, "scaling isomorphisms and witness equations", kBound5,
       [] { return from_checks(config(kAll, 100), {"rings.scaling"}); }},
      {6, "sigma_A and transfer diagonalization", kBound6,
       [] { return from_checks(config(kAll, 100), {"k1.sigma", "k1.transfer"}); }},
      {7, "induction key equality", kBound7, [] { return from_checks(config(kAll, 100), {"k1.induction"}); }},
      {8, "double cosets are finite unions of cosets", kBound8,
       [] { return from_checks(config(kAll, 1), {"groups.double-cosets"}); }},
      {9, "D-infinity classifier against the ball oracle", kBound9,
       [] { return from_checks(config({}, 1), {"vc.dinfty"}); }},
      {10, "PSL2(Z) normal forms, trace oracle, lengths, enumeration growth", kBound10, psl2_outcome},
      {11, "decomposition displays match goldens", kBound11, golden_outcome},
      {12, "suite all --seed 42 is byte-identical across runs", kBound12, determinism_outcome},
  };
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: semisplit_acceptance [--criterion N]\n";
      return 2;
    }
  }
  bool all_ok = true;
  int ran = 0;
  for (const Criterion& c : criteria()) {
    if (only && c.id != only) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.bound_seconds;
    const bool ok = o.ok && in_time;
    all_ok = all_ok && ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << secs << " s, bound "
         << c.bound_seconds << " s) " << o.detail << (in_time ? "" : " [over time bound]");
    std::cout << line.str() << std::endl;
  }
  if (!ran) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return all_ok ? 0 : 1;
}
