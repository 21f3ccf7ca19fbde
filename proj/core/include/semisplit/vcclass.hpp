#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semisplit/amalgam.hpp"

namespace semisplit {

enum class VCKind { Finite, FiniteByCyclic, DihedralType };
std::string to_string(VCKind k);

enum class Family { Fin, Fbc, Vc };

/// Subgroup of D-infinity in canonical form: translations n Z, reflections (r + n Z, 1).
struct DinftySubgroup {
  std::vector<DinftyElem> generators;
  std::int64_t translation = 0;            // n >= 0
  std::optional<std::int64_t> reflection;  // offset r, reduced mod n when n > 0
  VCKind kind = VCKind::Finite;
  std::int64_t finite_order = 1;           // for Finite

  bool contains(const DinftyElem& g) const;
  nlohmann::json to_json() const;
};

DinftySubgroup classify_dinfty_subgroup(const std::vector<DinftyElem>& gens);
bool family_membership(const DinftySubgroup& s, Family f);
/// Closure of the generators inside the window |n| <= radius (oracle for the classifier).
std::set<DinftyElem> dinfty_ball_closure(const std::vector<DinftyElem>& gens, std::int64_t radius);

namespace psl2 {

/// Syllables: 1 = a, 2 = b, 3 = b^2 (written B).
using Word = std::vector<std::uint8_t>;
using Matrix = std::array<std::int64_t, 4>;  // row major, identified with its negative

Matrix generator_a();
Matrix generator_b();
Matrix multiply(const Matrix& x, const Matrix& y);
bool same_element(const Matrix& x, const Matrix& y);
std::int64_t trace(const Matrix& m);

/// Free reduction to the alternating normal form.
Word reduce(const Word& w);
Word concat(const Word& x, const Word& y);
Word inverse(const Word& w);
Word parse(const std::string& s);  // letters a, b, B; "1" or "" is the identity
std::string print(const Word& w);  // identity prints "1"

Matrix eval(const Word& w);
/// Throws NonUnimodular when det != 1.
Word normal_form(const Matrix& m);

enum class Type { Identity, Elliptic, Hyperbolic };
enum class MaxVC { None, Cyclic, Dihedral };

struct Classification {
  Type type = Type::Identity;
  int order = 1;               // elliptic order
  std::size_t translation_length = 0;
  MaxVC max_vc = MaxVC::None;
  Word cyclic_core;            // cyclically reduced conjugate
  Word conjugator;             // w = c core c^-1
  std::optional<Word> inverter;  // x with x w x^-1 = w^-1
  nlohmann::json to_json() const;
};

Classification classify(const Word& w);
/// Every reduced x with at most max_len syllables and x a x^-1 = b.
std::optional<Word> find_conjugator(const Word& a, const Word& b, std::size_t max_len);
/// All reduced words with at most max_len syllables.
std::vector<Word> all_words(std::size_t max_len);

struct VCClass {
  Word representative;
  MaxVC max_vc = MaxVC::Cyclic;
};

inline constexpr int kEnumerationCap = 14;
/// Primitive cyclically reduced words of syllable length <= L up to rotation and inversion.
std::vector<VCClass> enumerate_maximal_vc(int L, int cap = kEnumerationCap);

std::string to_string(Type t);
std::string to_string(MaxVC m);

}  // namespace psl2

}  // namespace semisplit
