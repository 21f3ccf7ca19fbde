#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semisplit/nilcat.hpp"

namespace semisplit {

/// Invertible square matrix together with a verified two-sided inverse.
class K1Witness {
 public:
  /// Throws NotInvertible unless A * inv = inv * A = I.
  static K1Witness create(RingMatrix A, RingMatrix inv);

  const RingMatrix& matrix() const { return A_; }
  const RingMatrix& inverse() const { return inv_; }
  const RingTag& tag() const { return A_.tag(); }
  std::size_t size() const { return A_.rows(); }

 private:
  K1Witness(RingMatrix A, RingMatrix inv) : A_(std::move(A)), inv_(std::move(inv)) {}
  RingMatrix A_, inv_;
};

/// Row op: row dst += lambda * row src. Column op: col dst += col src * lambda.
struct ElementaryOp {
  enum class Kind { Row, Column };
  Kind kind = Kind::Row;
  std::size_t src = 0, dst = 0;
  RingElem lambda;
};

RingMatrix apply_ops(const RingMatrix& m, const std::vector<ElementaryOp>& ops);

struct ElementaryCertificate {
  std::string label;
  RingMatrix source, target;
  std::vector<ElementaryOp> ops;

  RingMatrix replay() const { return apply_ops(source, ops); }
  bool verify() const { return replay() == target; }
  nlohmann::json to_json() const;
  /// Parses against the amalgam and coefficients of `base` (kind is read from the file).
  static ElementaryCertificate from_json(const nlohmann::json& j, const RingTag& base);
};

/// I - t^{+-1} M over the polynomial ring of y's twist; inverse from the geometric series.
K1Witness sigma_B(const NilB& y, int kmax = 64);
/// diag(I - tM1, I - t^-1 M2) over the Laurent ring (primed if the twists are primed).
K1Witness sigma_B_combined(const NilB& plus, const NilB& minus, int kmax = 64);

/// [[I, T_first M1], [T_second M2, I]] over R[G], without the nilpotency precondition.
RingMatrix sigma_A_matrix(const NilA& x);
/// sigma_A_matrix with its inverse certificate; x must be certified.
K1Witness sigma_A(const NilA& x, int kmax = 64);

/// Entrywise t_i * m for an R[F] matrix, as an R[G] matrix.
RingMatrix letter_times(int letter, const RingMatrix& m);
/// Entrywise theta (Laurent) or theta' (LaurentPrime); polynomial tags go through psi first.
RingMatrix theta_image(const RingMatrix& m);
K1Witness induce_theta(const K1Witness& w);

enum class EliminationSide { T, TPrime };

struct DiagonalReport {
  EliminationSide side = EliminationSide::T;
  ElementaryCertificate certificate;
  RingMatrix D;         // nontrivial diagonal block after elimination
  RingMatrix expected;  // theta-image of sigma_B of the matching composite
  RingMatrix residual;  // replay minus the expected diagonal form
  bool ok = false;
};

/// t-side: diag(I - theta(t C), I) with C = j(x); t'-side: diag(I, I - theta'(t' C')) with C' = j'(x).
/// `naive` writes the column-operation entries with the coefficient left of the letter (m T_i).
DiagonalReport diagonalize_sigmaA(const NilA& x, EliminationSide side, bool naive = false);
/// Both sides; throws DiagonalizationFailed with the residual.
std::vector<DiagonalReport> verify_sigmaA_diagonalization(const NilA& x);

/// sigma_A(x) = Pi sigma_A'(tau_A x) Pi^-1 with Pi the block swap; throws IdentityFails.
void verify_sigmaA_swap(const NilA& x);

/// y with twist alpha: the t-side certificate turns sigma_A(i(y)) into diag(theta psi+ sigma_B(y), I).
ElementaryCertificate verify_induction_key(const NilB& y);
/// y with twist alpha^-1: sigma_A(tau_A^-1 i'(beta_u+ y)) eliminates (t'-side) to diag(I, D) with
/// D = theta(psi- sigma_B(y)) literally.
ElementaryCertificate verify_induction_second_branch(const NilB& y);

/// beta_u (entrywise) o sigma_B = sigma_B o scale_nil, literal matrices. Throws IdentityFails.
void verify_scaling_witness(const NilB& y, Scaling s);
/// beta_u(diag(I - tM1, I - t^-1 M2)) = Pi diag(I - t'M2', I - t'^-1 M1') Pi^-1.
void verify_scaling_combined(const NilB& plus, const NilB& minus);

/// Restriction of scalars along R[Gbar] -> R[G] in the left basis {1, t1}; output over the Laurent ring.
RingMatrix transfer_theta(const RingMatrix& W);
K1Witness transfer_theta(const K1Witness& w);
/// Permutation taking (e_P1, e_P2, t1 e_P1, t1 e_P2) to (P1, t1 P2, P2, t1 P1).
std::vector<std::size_t> transfer_order(std::size_t n1, std::size_t n2);

struct TransferReport {
  RingMatrix transferred;  // transfer_theta(sigma_A(x)) in the order P1, t1 P2, P2, t1 P1
  ElementaryCertificate certificate;
  RingMatrix D1;  // = psi+ sigma_B(j x)
  RingMatrix D2;  // theta(D2) = theta' psi'+ sigma_B(j' x)
};
TransferReport verify_transfer_diagonalization(const NilA& x);
/// transfer(diag(A, B)) = P diag(transfer A, transfer B) P^-1; throws IdentityFails.
void verify_transfer_additivity(const RingMatrix& A, const RingMatrix& B);

}  // namespace semisplit
