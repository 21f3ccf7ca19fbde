#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "semisplit/matrix.hpp"

namespace semisplit {

/// Twist of a type-B Nil object: rho maps P to t^{+-1} P (or t'^{+-1} P).
enum class Twist { Alpha, AlphaInv, AlphaPrime, AlphaPrimeInv };

std::string to_string(Twist t);
Twist parse_twist(const std::string& s);
const GroupAut& twist_aut(const Amalgam& G, Twist t);
/// Twisted polynomial ring in which I - t^{+-1} M lives.
RingKind twist_ring(Twist t);
std::int64_t twist_exponent(Twist t);

/// (P, rho) with P free of rank n and rho = right multiplication by t^{+-1} M.
struct NilB {
  Twist twist = Twist::Alpha;
  RingMatrix M;  // over R[F], n x n
  std::size_t rank() const { return M.rows(); }
  friend bool operator==(const NilB&, const NilB&) = default;
};

/// Which bimodule comes first: B1B2 objects live in Nil(R[F]; B1, B2).
enum class Order { B1B2, B2B1 };

/// (P1, P2, rho1, rho2): rho1 = right multiplication by t_first M1 (n1 x n2),
/// rho2 = right multiplication by t_second M2 (n2 x n1).
struct NilA {
  Order order = Order::B1B2;
  RingMatrix M1, M2;
  std::size_t n1() const { return M1.rows(); }
  std::size_t n2() const { return M2.rows(); }
  std::int64_t k0_defect() const { return static_cast<std::int64_t>(n2()) - static_cast<std::int64_t>(n1()); }
  int first_letter() const { return order == Order::B1B2 ? 1 : 2; }
  int second_letter() const { return order == Order::B1B2 ? 2 : 1; }
  friend bool operator==(const NilA&, const NilA&) = default;
};

/// Pair of R[F]-maps (row convention) between the P1 and P2 parts.
struct NilAMorphism {
  RingMatrix U1, U2;
};

NilA make_nilA(Order order, RingMatrix M1, RingMatrix M2);

/// TP_k = tw^{k-1}(M) ... tw(M) M, so that (t M)^k = t^k TP_k.
RingMatrix twisted_power(const RingMatrix& M, const GroupAut& tw, int k);

struct NilpotencyResult {
  bool nilpotent = false;
  int degree = 0;                      // least d >= 1 with TP_d = 0
  std::optional<RingMatrix> witness;   // TP_kmax when not nilpotent
};
NilpotencyResult nilpotency_check(const NilB& y, int kmax = 64);

struct NilAPairResult {
  NilpotencyResult composite;        // rho2 rho1
  NilpotencyResult composite_prime;  // rho1 rho2
  bool certified() const;            // both nilpotent and degrees differ by at most one
};
NilAPairResult nilpotency_check(const NilA& x, int kmax = 64);
/// Degree, or NotNilpotentWithinBound carrying the last twisted power.
int require_nilpotent(const NilB& y, int kmax = 64);
/// Both composites nilpotent with adjacent degrees; returns the degree of rho2 rho1.
int require_nilpotent(const NilA& x, int kmax = 64);

/// The alpha-twisted composite: rho2 rho1 on P1 for B1B2 objects, rho1 rho2 on P2 for B2B1.
NilB functor_j(const NilA& x);
/// The alpha'-twisted composite: rho2 rho1 on P1 for B2B1 objects, rho1 rho2 on P2 for B1B2.
NilB functor_jprime(const NilA& x);
NilA functor_i(const NilB& y);       // Nil(R[F], alpha) -> B1B2, P2 = t2 P
NilA functor_iprime(const NilB& y);  // Nil(R[F], alpha') -> B2B1, P2 = t1 P
/// Composite of a type-A object in its own order (j or j').
NilB composite(const NilA& x);
/// The other composite, rho_first o rho_second, i.e. j'(tau_A x) or j(tau_A x).
NilB composite_prime(const NilA& x);

NilA tauA(const NilA& x);
/// [P, rho] -> [t2 P, t2 rho]: alpha -> alpha'.
NilB tauB(const NilB& y);
/// [P', rho'] -> [t1 P', t1 rho']: alpha' -> alpha.
NilB tauB_prime(const NilB& y);
/// [P, rho] -> [tP, t rho] in the basis t e_k (same twist).
NilB shift(const NilB& y);

enum class Scaling { BetaPlus, BetaMinus };
/// beta_u+: Nil(alpha^-1) -> Nil(alpha'); beta_u-: Nil(alpha) -> Nil(alpha'^-1).
NilB scale_nil(const NilB& y, Scaling s);

bool is_morphism(const NilAMorphism& m, const NilA& src, const NilA& dst);
NilA direct_sum(const NilA& a, const NilA& b);
/// X1 + X2 -> Y1 + Y2 with a: X1 -> Y1, b: X1 -> Y2, c: X2 -> Y1, d: X2 -> Y2.
NilAMorphism block_morphism(const NilAMorphism& a, const NilAMorphism& b, const NilAMorphism& c,
                            const NilAMorphism& d);
/// X1 + X2 -> Y from a: X1 -> Y and b: X2 -> Y.
NilAMorphism stack_morphism(const NilAMorphism& a, const NilAMorphism& b);
NilAMorphism zero_morphism(const NilA& src, const NilA& dst);
NilAMorphism identity_morphism(const NilA& x);
/// Transport x along invertible (U1, U2); returns y with (U1, U2): x -> y a morphism.
NilA transport(const NilA& x, const RingMatrix& U1, const RingMatrix& U1inv, const RingMatrix& U2,
               const RingMatrix& U2inv);

struct ProofObjects {
  NilA x, x1, x2, a, a1;  // x, x', x'', a, a'
  NilAMorphism f, f1, g, g1, h;  // f: x->x', f': x'->x'', g: a->x', g': x'->a', h: a->a'
};
ProofObjects build_proof_objects(const NilA& x);

/// Every (F, F)-double coset of G_letter is a single left coset. Exhaustive on F0 x {1, T};
/// for r > 0 the lattice part is sampled on the radius-1 ball.
bool double_cosets_are_cosets(const Amalgam& G, int letter);

nlohmann::json to_json(const NilB& y);
nlohmann::json to_json(const NilA& x);
NilB nilB_from_json(const nlohmann::json& j, const RingTag& base);
NilA nilA_from_json(const nlohmann::json& j, const RingTag& base);

}  // namespace semisplit
