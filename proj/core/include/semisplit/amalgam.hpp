#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semisplit/group.hpp"

namespace semisplit {

/// Normal form L*f: alternating letters from {1, 2} (meaning T1, T2) followed by a tail in F.
struct GroupWord {
  std::vector<std::uint8_t> letters;
  FElem tail;

  auto operator<=>(const GroupWord&) const = default;
};

/// t^n * f in the index-2 subgroup generated by F and t = T1 T2.
struct BarElement {
  std::int64_t n = 0;
  FElem f;
  auto operator<=>(const BarElement&) const = default;
};

/// Element of D-infinity acting on Z by x -> (-1)^flip * x + n.
struct DinftyElem {
  std::int64_t n = 0;
  int flip = 0;

  DinftyElem operator*(const DinftyElem& o) const {
    return {n + (flip ? -o.n : o.n), flip ^ o.flip};
  }
  DinftyElem inverse() const { return {flip ? n : -n, flip}; }
  auto operator<=>(const DinftyElem&) const = default;
};

/// A letter T_i^{+-1} or an element of F, for building words before normalization.
struct RawToken {
  enum class Kind { Letter, Element } kind = Kind::Element;
  int letter = 0;
  int exponent = 1;
  FElem f;

  static RawToken t(int i, int e = 1) { return {Kind::Letter, i, e, {}}; }
  static RawToken elem(const FElem& x) { return {Kind::Element, 0, 1, x}; }
};

/// Index-two amalgam G = G1 *_F G2 encoded by (F, alpha1, alpha2, s1, s2) with
/// alpha_i(x) = T_i^{-1} x T_i and T_i^2 = s_i.
class Amalgam {
 public:
  struct Spec {
    std::string name;
    BaseGroup F;
    GroupAut alpha1, alpha2;
    FElem s1, s2;
    std::map<std::string, int> names;       // symbolic names of F0 elements
    std::optional<int> t1_order, t2_order;  // declared orders of T1, T2 in G1, G2
  };

  /// Validates the descriptor and derives alpha, alpha', u.
  static std::shared_ptr<const Amalgam> create(Spec spec);

  const std::string& name() const { return spec_.name; }
  const BaseGroup& F() const { return spec_.F; }
  const std::map<std::string, int>& names() const { return spec_.names; }
  const Spec& spec() const { return spec_; }

  const GroupAut& alpha_letter(int i) const { return i == 1 ? spec_.alpha1 : spec_.alpha2; }
  const GroupAut& alpha_letter_inv(int i) const { return i == 1 ? alpha1_inv_ : alpha2_inv_; }
  const FElem& s(int i) const { return i == 1 ? spec_.s1 : spec_.s2; }
  /// alpha = alpha2 o alpha1 (conjugation by t = T1 T2).
  const GroupAut& alpha() const { return alpha_; }
  const GroupAut& alpha_inv() const { return alpha_inv_; }
  /// alpha' = alpha1 o alpha2 (conjugation by t' = T2 T1).
  const GroupAut& alpha_prime() const { return alpha_prime_; }
  const GroupAut& alpha_prime_inv() const { return alpha_prime_inv_; }
  /// u = t'^{-1} t^{-1}, an element of F.
  const FElem& u() const { return u_; }

  GroupWord identity() const { return {}; }
  GroupWord letter(int i) const;
  GroupWord element(const FElem& f) const { return {{}, f}; }
  GroupWord mul(const GroupWord& a, const GroupWord& b) const;
  GroupWord inverse(const GroupWord& a) const;
  GroupWord power(const GroupWord& a, std::int64_t n) const;
  GroupWord normal_form(std::span<const RawToken> tokens) const;
  /// Right multiplication by a single token, in place.
  void append(GroupWord& w, const RawToken& tok) const;

  GroupWord t() const;        // T1 T2
  GroupWord t_prime() const;  // T2 T1

  BarElement bar_convert(const GroupWord& w) const;
  GroupWord from_bar(const BarElement& b) const;
  BarElement bar_mul(const BarElement& a, const BarElement& b) const;
  /// alpha^n applied to x, for any integer n.
  FElem alpha_pow(std::int64_t n, const FElem& x) const;
  FElem alpha_prime_pow(std::int64_t n, const FElem& x) const;

  /// p(T1) = (0,1), p(T2) = (-1,1), F maps to the identity.
  DinftyElem project(const GroupWord& w) const;

 private:
  explicit Amalgam(Spec spec) : spec_(std::move(spec)) {}
  void append_letter(GroupWord& w, int i) const;

  Spec spec_;
  GroupAut alpha1_inv_, alpha2_inv_;
  GroupAut alpha_, alpha_inv_, alpha_prime_, alpha_prime_inv_;
  FElem u_;
};

using AmalgamPtr = std::shared_ptr<const Amalgam>;

}  // namespace semisplit
