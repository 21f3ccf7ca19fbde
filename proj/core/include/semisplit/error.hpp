#pragma once

#include <stdexcept>
#include <string>

namespace semisplit {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define SEMISPLIT_ERROR(Name)                                              \
  class Name : public Error {                                              \
   public:                                                                 \
    explicit Name(const std::string& detail) : Error(#Name, detail) {}     \
  };

SEMISPLIT_ERROR(ParseError)
SEMISPLIT_ERROR(NotAGroup)
SEMISPLIT_ERROR(NotAnAutomorphism)
SEMISPLIT_ERROR(SquareRelationFails)
SEMISPLIT_ERROR(FixedPointFails)
SEMISPLIT_ERROR(InternalInconsistency)
SEMISPLIT_ERROR(NotInBarSubgroup)
SEMISPLIT_ERROR(TagMismatch)
SEMISPLIT_ERROR(InvalidInclusionPair)
SEMISPLIT_ERROR(ArithmeticOverflow)
SEMISPLIT_ERROR(NonSquare)
SEMISPLIT_ERROR(ShapeMismatch)
SEMISPLIT_ERROR(TwistMismatch)
SEMISPLIT_ERROR(NotCertifiedNilpotent)
SEMISPLIT_ERROR(NotAMorphism)
SEMISPLIT_ERROR(UnsupportedCoefficients)
SEMISPLIT_ERROR(DiagonalizationFailed)
SEMISPLIT_ERROR(IdentityFails)
SEMISPLIT_ERROR(DecompositionError)
SEMISPLIT_ERROR(NotInvertible)
SEMISPLIT_ERROR(NotExactAt)
SEMISPLIT_ERROR(NotNilpotentWithinBound)
SEMISPLIT_ERROR(NonUnimodular)
SEMISPLIT_ERROR(CapExceeded)

#undef SEMISPLIT_ERROR

}  // namespace semisplit
