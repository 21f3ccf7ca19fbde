#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "semisplit/amalgam.hpp"
#include "semisplit/coeff.hpp"

namespace semisplit {

/// Which ring an element lives in. Unprimed twisted rings use alpha and t = T1T2,
/// primed ones use alpha' and t' = T2T1.
enum class RingKind {
  GroupRingF,      // R[F]
  PolyPlus,        // R[F]_alpha[t]
  PolyMinus,       // R[F]_{alpha^-1}[t^-1]
  Laurent,         // R[F]_alpha[t, t^-1] = R[Gbar]
  PolyPlusPrime,   // R[F]_alpha'[t']
  PolyMinusPrime,  // R[F]_{alpha'^-1}[t'^-1]
  LaurentPrime,    // R[F]_alpha'[t', t'^-1]
  GroupRingG,      // R[G]
};

std::string to_string(RingKind k);
/// Inverse of to_string; throws ParseError.
RingKind parse_ring_kind(const std::string& s);
bool is_primed(RingKind k);
bool is_twisted(RingKind k);

struct RingTag {
  RingKind kind = RingKind::GroupRingF;
  AmalgamPtr amalgam;
  CoeffRing coeff;

  RingTag with_kind(RingKind k) const { return {k, amalgam, coeff}; }
  bool operator==(const RingTag& o) const {
    return kind == o.kind && amalgam.get() == o.amalgam.get() && coeff == o.coeff;
  }
};

/// t^power * word. For twisted kinds the word has no letters; for R[G] power is 0.
struct Monomial {
  std::int64_t power = 0;
  GroupWord word;

  auto operator<=>(const Monomial&) const = default;
};

/// Sparse exact element: monomial -> nonzero coefficient.
class RingElem {
 public:
  using Terms = std::map<Monomial, std::int64_t>;

  RingElem() = default;
  explicit RingElem(RingTag tag) : tag_(std::move(tag)) {}

  static RingElem scalar(const RingTag& tag, std::int64_t c);
  static RingElem monomial(const RingTag& tag, const Monomial& m, std::int64_t c = 1);
  static RingElem element(const RingTag& tag, const FElem& f, std::int64_t c = 1);
  /// t^n (or t'^n) in a twisted ring.
  static RingElem t_power(const RingTag& tag, std::int64_t n);
  static RingElem word(const RingTag& tag, const GroupWord& w, std::int64_t c = 1);

  const RingTag& tag() const { return tag_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff_of(const Monomial& m) const;

  void add_term(const Monomial& m, std::int64_t c);

  RingElem operator-() const;
  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  RingElem& operator+=(const RingElem& b);
  RingElem& operator-=(const RingElem& b);
  friend bool operator==(const RingElem& a, const RingElem& b) {
    return a.tag_ == b.tag_ && a.terms_ == b.terms_;
  }

  /// Same terms under another kind; checks exponent signs and letters fit.
  RingElem retag(RingKind k) const;
  /// Apply an automorphism of F to the F-part of every monomial (R[F] only).
  RingElem twisted(const GroupAut& a) const;
  /// Left multiplication by an element of F.
  RingElem left_mul(const FElem& f) const;

 private:
  RingTag tag_;
  Terms terms_;
};

void require_same_tag(const RingTag& a, const RingTag& b, const char* where);

/// Inclusions between the ring family.
enum class Inclusion {
  FromF,        // R[F] into any ring
  PsiPlus,      // PolyPlus -> Laurent
  PsiMinus,     // PolyMinus -> Laurent
  PsiPlusPrime, // PolyPlusPrime -> LaurentPrime
  PsiMinusPrime,// PolyMinusPrime -> LaurentPrime
  Theta,        // Laurent -> R[G], t -> T1T2
  ThetaPrime,   // LaurentPrime -> R[G], t' -> T2T1
  Phi,          // theta o psi+
  PhiPrime,     // theta' o psi'+
};

RingElem embed(const RingElem& x, Inclusion inc, RingKind target = RingKind::GroupRingG);
/// Inverse of theta (or theta') on the even-length part of R[G].
RingElem restrict_to_bar(const RingElem& x, bool primed = false);

/// Scaling isomorphisms: beta_u(t) = u^{-1} t'^{-1}, beta_u(t^-1) = t' u, identity on R[F].
/// Source PolyMinus -> PolyPlusPrime (beta_u+), PolyPlus -> PolyMinusPrime (beta_u-),
/// Laurent -> LaurentPrime (beta_u).
RingElem beta_u(const RingElem& x);
/// Inverse direction, from the primed rings back.
RingElem beta_u_inverse(const RingElem& x);

/// Element of the bimodule B_i = t_i R[F]; payload lives in R[F].
struct BimoduleElem {
  int side = 1;
  RingElem payload;
};

/// t1 x1 (x) t2 x2 -> t alpha2(x1) x2 in the Laurent ring.
RingElem tensor_identify(const BimoduleElem& b1, const BimoduleElem& b2);
/// t2 x2 (x) t1 x1 -> t' alpha1(x2) x1 in the primed Laurent ring.
RingElem tensor_identify_prime(const BimoduleElem& b2, const BimoduleElem& b1);
/// t_i x as an element of R[G].
RingElem bimodule_to_group_ring(const BimoduleElem& b);

}  // namespace semisplit
