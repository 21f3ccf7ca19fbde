#include "semisplit/fixture.hpp"

#include <cstdlib>
#include <fstream>

#include "semisplit/error.hpp"

#ifndef SEMISPLIT_FIXTURE_DIR
#define SEMISPLIT_FIXTURE_DIR "fixtures"
#endif

namespace semisplit {

namespace {

using nlohmann::json;

FElem parse_element(const json& j, const BaseGroup& F, const std::map<std::string, int>& names) {
  FElem e;
  if (j.is_number_integer()) {
    e.idx = j.get<int>();
  } else if (j.is_string()) {
    auto it = names.find(j.get<std::string>());
    if (it == names.end()) throw ParseError("unknown element name '" + j.get<std::string>() + "'");
    e.idx = it->second;
  } else if (j.is_object()) {
    e.idx = j.value("f", 0);
    if (j.contains("z")) {
      const auto z = j.at("z").get<std::vector<std::int64_t>>();
      if (static_cast<int>(z.size()) != F.free_rank()) throw ParseError("lattice part has wrong length");
      for (std::size_t k = 0; k < z.size(); ++k) e.z[k] = z[k];
    }
  } else {
    throw ParseError("element must be an index, a name or {f, z}");
  }
  if (e.idx < 0 || e.idx >= F.finite_order()) throw ParseError("element index out of range");
  return e;
}

GroupAut parse_aut(const json& j, const BaseGroup& F, const std::map<std::string, int>& names) {
  if (j.is_string() && j.get<std::string>() == "id") return GroupAut::identity(F);
  if (!j.is_object()) throw ParseError("automorphism must be \"id\" or an object");
  if (j.contains("conj")) return GroupAut::inner(F, parse_element(j.at("conj"), F, names));
  if (!j.contains("perm")) throw ParseError("automorphism needs 'perm' or 'conj'");
  auto lattice = j.value("lattice", std::vector<std::vector<std::int64_t>>{});
  return GroupAut::create(F, j.at("perm").get<std::vector<int>>(), std::move(lattice));
}

}  // namespace

AmalgamPtr load_amalgam(const json& doc) {
  try {
    Amalgam::Spec spec;
    spec.name = doc.value("name", std::string("unnamed"));
    const json& f = doc.at("F");
    const int rank = f.value("free_rank", 0);
    if (f.contains("table"))
      spec.F = BaseGroup::from_table(f.at("table").get<std::vector<std::vector<int>>>(), rank);
    else if (f.contains("perm_gens"))
      spec.F = BaseGroup::from_permutations(f.at("perm_gens").get<std::vector<std::vector<int>>>(), rank);
    else
      throw ParseError("F needs 'table' or 'perm_gens'");
    if (doc.contains("names")) spec.names = doc.at("names").get<std::map<std::string, int>>();
    spec.alpha1 = parse_aut(doc.at("alpha1"), spec.F, spec.names);
    spec.alpha2 = parse_aut(doc.at("alpha2"), spec.F, spec.names);
    spec.s1 = parse_element(doc.at("s1"), spec.F, spec.names);
    spec.s2 = parse_element(doc.at("s2"), spec.F, spec.names);
    if (doc.contains("t1_order")) spec.t1_order = doc.at("t1_order").get<int>();
    if (doc.contains("t2_order")) spec.t2_order = doc.at("t2_order").get<int>();
    return Amalgam::create(std::move(spec));
  } catch (const json::exception& e) {
    throw ParseError(std::string("descriptor: ") + e.what());
  }
}

AmalgamPtr load_amalgam_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return load_amalgam(doc);
}

AmalgamPtr resolve_fixture(const std::string& name_or_path, const std::filesystem::path& dir) {
  std::filesystem::path p(name_or_path);
  if (std::filesystem::exists(p) && std::filesystem::is_regular_file(p)) return load_amalgam_file(p);
  return load_amalgam_file(dir / (name_or_path + ".json"));
}

std::filesystem::path default_fixture_dir() {
  if (const char* env = std::getenv("SEMISPLIT_FIXTURES")) return env;
  return SEMISPLIT_FIXTURE_DIR;
}

}  // namespace semisplit
