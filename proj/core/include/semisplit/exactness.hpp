#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semisplit/intlattice.hpp"
#include "semisplit/nilcat.hpp"

namespace semisplit {

/// Integer matrix of x -> xU on R^{n|F0|}; row (k, g) is the image of g e_k.
lattice::IntMatrix regular_representation(const RingMatrix& U);

/// Coordinates back to a row of R[F] literals.
std::vector<std::string> witness_literals(const lattice::IntVector& v, const RingTag& tag);

struct ExactnessVerdict {
  std::string component;  // "P1" or "P2"
  std::string position;   // left | middle | right | equivariance | morphism
  std::string detail;
  bool ok = true;
  std::vector<std::string> witness;
};

struct ExactnessReport {
  std::vector<ExactnessVerdict> verdicts;
  bool exact() const;
  const ExactnessVerdict* first_failure() const;
  nlohmann::json to_json() const;
};

struct ShortSequence {
  NilA L, M, R;
  NilAMorphism in, out;
};

/// 0 -> x + a -> x' + a -> a' -> 0 and 0 -> a -> x' -> x'' -> 0.
std::vector<ShortSequence> proof_sequences(const ProofObjects& p);

/// 0 -> L -in-> M -out-> R -> 0 in Nil(R[F]; B1, B2), checked componentwise.
ExactnessReport check_exact(const NilA& L, const NilA& M, const NilA& R, const NilAMorphism& in,
                            const NilAMorphism& out);
ExactnessReport check_exact(const ShortSequence& s);
/// Same check; throws NotExactAt naming the first failing position with its witness.
void require_exact(const NilA& L, const NilA& M, const NilA& R, const NilAMorphism& in, const NilAMorphism& out);

}  // namespace semisplit
