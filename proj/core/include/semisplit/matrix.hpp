#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "semisplit/ring.hpp"

namespace semisplit {

/// Dense matrix over one tagged ring. Maps of free left modules act on row vectors
/// from the right: row i holds the image of the i-th basis vector.
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(RingTag tag, std::size_t rows, std::size_t cols);

  static RingMatrix identity(const RingTag& tag, std::size_t n);
  static RingMatrix zero(const RingTag& tag, std::size_t rows, std::size_t cols);
  static RingMatrix from_literals(const RingTag& tag, const std::vector<std::vector<std::string>>& rows);
  /// [[a, b], [c, d]] from blocks with compatible shapes.
  static RingMatrix blocks(const RingMatrix& a, const RingMatrix& b, const RingMatrix& c, const RingMatrix& d);
  static RingMatrix block_diag(const RingMatrix& a, const RingMatrix& b);
  static RingMatrix hstack(const RingMatrix& a, const RingMatrix& b);
  static RingMatrix vstack(const RingMatrix& a, const RingMatrix& b);
  /// Permutation matrix P with P[i][perm[i]] = 1, so (P M)[i] = M[perm[i]].
  static RingMatrix permutation(const RingTag& tag, const std::vector<std::size_t>& perm);

  const RingTag& tag() const { return tag_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  RingElem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const RingElem& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  RingMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  bool is_zero() const;
  bool is_identity() const;

  friend RingMatrix operator+(const RingMatrix& a, const RingMatrix& b);
  friend RingMatrix operator-(const RingMatrix& a, const RingMatrix& b);
  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
  RingMatrix operator-() const;
  friend bool operator==(const RingMatrix& a, const RingMatrix& b);

  /// Entrywise image; every result must carry the target tag.
  RingMatrix map(const RingTag& target, const std::function<RingElem(const RingElem&)>& f) const;
  /// Entrywise automorphism of F (R[F] matrices).
  RingMatrix twisted(const GroupAut& a) const;
  RingMatrix retag(RingKind k) const;
  /// Entrywise left multiplication by a ring element.
  RingMatrix left_scaled(const RingElem& s) const;

  std::vector<std::vector<std::string>> to_literals() const;
  std::string to_string() const;

 private:
  RingTag tag_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<RingElem> data_;
};

}  // namespace semisplit
