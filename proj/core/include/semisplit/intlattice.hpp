#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace semisplit::lattice {

/// Integer matrix as rows; maps act on row vectors: x -> x * M.
using IntMatrix = std::vector<std::vector<std::int64_t>>;
using IntVector = std::vector<std::int64_t>;

/// Row Hermite normal form (nonzero rows only, pivots positive, entries above pivots reduced).
IntMatrix hermite_form(const IntMatrix& m, std::size_t cols);
std::size_t rank(const IntMatrix& m, std::size_t cols);
/// Basis of {x : x M = 0}.
IntMatrix left_kernel(const IntMatrix& m, std::size_t cols);
bool in_row_lattice(const IntVector& v, const IntMatrix& m, std::size_t cols);
/// Diagonal of the Smith form of the row lattice (nonzero invariants only).
std::vector<std::int64_t> elementary_divisors(const IntMatrix& m, std::size_t cols);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner, std::size_t cols);

/// Exactness witnesses for maps over Z (modulus 0) or Z/m, given as integer lifts.
/// A: a x b, B: b x c.
std::optional<IntVector> composite_witness(const IntMatrix& A, const IntMatrix& B, std::size_t b, std::size_t c,
                                           std::int64_t modulus);
std::optional<IntVector> injectivity_witness(const IntMatrix& A, std::size_t a, std::size_t b, std::int64_t modulus);
std::optional<IntVector> middle_witness(const IntMatrix& A, const IntMatrix& B, std::size_t a, std::size_t b,
                                        std::size_t c, std::int64_t modulus);
std::optional<IntVector> surjectivity_witness(const IntMatrix& B, std::size_t b, std::size_t c, std::int64_t modulus);
/// Invariants of the cokernel Z^c / (rows(B) + mZ^c); empty means trivial cokernel.
std::vector<std::int64_t> cokernel_invariants(const IntMatrix& B, std::size_t c, std::int64_t modulus);

}  // namespace semisplit::lattice
