#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "semisplit/amalgam.hpp"
#include "semisplit/matrix.hpp"
#include "semisplit/nilcat.hpp"

namespace semisplit {

/// Deterministic stream derived from (seed, stream name). Range helpers avoid
/// std distributions so output is identical across standard libraries.
class Rng {
 public:
  Rng(std::uint64_t seed, std::string_view stream);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool chance(int numerator, int denominator) { return uniform(0, denominator - 1) < numerator; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

FElem random_felem(Rng& rng, const BaseGroup& F, int lattice_radius = 1);
std::vector<RawToken> random_tokens(Rng& rng, const Amalgam& G, int max_tokens);
GroupWord random_word(Rng& rng, const Amalgam& G, int max_tokens);
/// Up to max_terms terms, |power| <= max_power (respecting the kind), coefficients in [-c, c].
RingElem random_ring_elem(Rng& rng, const RingTag& tag, int max_terms = 3, int max_power = 2, int c = 2);
/// Entries are nonzero with probability density/4.
RingMatrix random_matrix(Rng& rng, const RingTag& tag, std::size_t rows, std::size_t cols, int density = 2,
                         int max_terms = 2);

struct InvertiblePair {
  RingMatrix U, inverse;
};
/// Product of elementary and signed monomial diagonal matrices over R[F], with its inverse.
InvertiblePair random_invertible(Rng& rng, const RingTag& tag, std::size_t n, int steps = 4);

/// Certified nilpotent: a conjugate of a strictly upper triangular matrix.
NilB random_nilB(Rng& rng, const RingTag& tag, Twist twist, std::size_t max_rank = 3);
/// Certified nilpotent: i(y) (or an A-only / B-only piece) plus zero summands, transported
/// along random invertible (U1, U2).
NilA random_nilA(Rng& rng, const RingTag& tag, Order order, std::size_t max_rank = 3);

}  // namespace semisplit
