#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semisplit/amalgam.hpp"
#include "semisplit/coeff.hpp"
#include "semisplit/random.hpp"

namespace semisplit::suite {

inline constexpr const char* kReportSchema = "semisplit-report/1";

struct Config {
  std::uint64_t seed = 42;
  int samples = 100;
  int kmax = 64;
  std::vector<CoeffRing> coeffs{CoeffRing::integers(), CoeffRing::mod(3)};
  std::vector<std::string> fixtures{"FIX-D", "FIX-Q", "FIX-S", "FIX-G0", "FIX-N"};
  std::filesystem::path fixtures_dir;
  bool timing = false;
  int dinfty_max_generators = 3;
};

struct Failure {
  int sample = -1;
  std::string coeff;
  std::string message;
  nlohmann::json witness;
};

struct Record {
  std::string check;
  std::string fixture;  // "-" for fixture-independent checks
  std::string status;   // pass, fail, skipped
  int samples_run = 0;
  int failure_count = 0;
  std::vector<Failure> failures;  // the first few, in sample order
  nlohmann::json info = nlohmann::json::object();
  double wall_seconds = 0;

  nlohmann::json to_json(bool timing) const;
};

/// Per-run state handed to a check body.
class Context {
 public:
  Context(const Config& cfg, std::string check, AmalgamPtr G, Record& rec);

  const Config& config() const { return cfg_; }
  const AmalgamPtr& amalgam() const { return G_; }
  const std::string& fixture() const { return rec_.fixture; }
  nlohmann::json& info() { return rec_.info; }
  /// Deterministic stream derived from (seed, check id, fixture, label).
  Rng rng(const std::string& label) const;

  /// Runs one sample; exceptions and failed expectations become failures carrying `witness`.
  void sample(const std::string& coeff, const std::function<void()>& body);
  void expect(bool ok, const std::string& message);
  void skip(const std::string& reason);
  nlohmann::json witness;

 private:
  void fail(const std::string& message);

  const Config& cfg_;
  std::string check_;
  AmalgamPtr G_;
  Record& rec_;
  std::string coeff_;
  int current_ = -1;
};

struct Check {
  std::string id;
  std::string summary;
  bool per_fixture = true;
  std::function<void(Context&)> body;
};

const std::vector<Check>& checks();
const Check& find_check(const std::string& id);

Record run_check(const Check& c, const std::string& fixture, const Config& cfg);

struct Report {
  Config config;
  std::vector<Record> records;  // sorted by (check, fixture)
  bool pass() const;
  nlohmann::json to_json() const;
};

/// Runs every check whose id starts with `prefix`.
Report run_suite(const Config& cfg, const std::string& prefix = "");

}  // namespace semisplit::suite
