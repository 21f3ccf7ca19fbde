#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace semisplit {

inline constexpr int kMaxFreeRank = 3;
inline constexpr int kMaxFiniteOrder = 64;

/// Element of F = F0 x Z^r: index into the finite part plus a lattice vector.
struct FElem {
  int idx = 0;
  std::array<std::int64_t, kMaxFreeRank> z{};

  auto operator<=>(const FElem&) const = default;
};

/// F = F0 x Z^r with F0 given by a validated multiplication table.
class BaseGroup {
 public:
  BaseGroup() = default;
  /// table[i][j] = index of i*j; identity must be index 0.
  static BaseGroup from_table(const std::vector<std::vector<int>>& table, int free_rank);
  /// Closure of permutation generators; elements are numbered in breadth-first order
  /// from the identity, multiplying on the right by generators in the given order.
  static BaseGroup from_permutations(const std::vector<std::vector<int>>& gens, int free_rank);

  int finite_order() const { return order_; }
  int free_rank() const { return rank_; }
  bool is_finite() const { return rank_ == 0; }

  FElem identity() const { return {}; }
  FElem mul(const FElem& a, const FElem& b) const;
  FElem inv(const FElem& a) const;
  FElem lattice_generator(int k) const;
  int table(int i, int j) const { return table_[static_cast<std::size_t>(i * order_ + j)]; }
  /// Elements of F0 (lattice part zero).
  std::vector<FElem> finite_elements() const;
  /// Finite part times the lattice box [-radius, radius]^r.
  std::vector<FElem> ball(int radius) const;
  int element_order(const FElem& a) const;  // 0 when infinite

 private:
  int order_ = 1;
  int rank_ = 0;
  std::vector<int> table_{0};
  std::vector<int> inverse_{0};
};

/// Product automorphism of F0 x Z^r: a permutation of F0 and a unimodular lattice map.
class GroupAut {
 public:
  GroupAut() = default;
  static GroupAut identity(const BaseGroup& g);
  /// Validates the permutation against the table and det(lattice) = +-1.
  static GroupAut create(const BaseGroup& g, std::vector<int> perm,
                         std::vector<std::vector<std::int64_t>> lattice);
  /// x -> c^{-1} x c (lattice part untouched).
  static GroupAut inner(const BaseGroup& g, const FElem& c);

  FElem apply(const FElem& x) const;
  GroupAut inverse() const;
  /// (this o other)(x) = this(other(x)).
  GroupAut compose(const GroupAut& other) const;
  bool operator==(const GroupAut& o) const { return perm_ == o.perm_ && lattice_ == o.lattice_; }
  const std::vector<int>& perm() const { return perm_; }
  std::vector<std::vector<std::int64_t>> lattice() const;

 private:
  std::vector<int> perm_{0};
  int rank_ = 0;
  std::array<std::array<std::int64_t, kMaxFreeRank>, kMaxFreeRank> lattice_{};
};

}  // namespace semisplit
