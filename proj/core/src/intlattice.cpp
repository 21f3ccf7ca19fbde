#include "semisplit/intlattice.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

#include "semisplit/error.hpp"

namespace semisplit::lattice {

namespace {

using Big = boost::multiprecision::cpp_int;
using BigRow = std::vector<Big>;
using BigMatrix = std::vector<BigRow>;

BigMatrix to_big(const IntMatrix& m, std::size_t cols) {
  BigMatrix out;
  out.reserve(m.size());
  for (const auto& r : m) {
    if (r.size() != cols) throw ShapeMismatch("integer matrix row has wrong length");
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

IntVector to_small(const BigRow& r) {
  IntVector out;
  out.reserve(r.size());
  for (const Big& x : r) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
      throw ArithmeticOverflow("lattice witness does not fit in 64 bits");
    out.push_back(static_cast<std::int64_t>(x));
  }
  return out;
}

Big floor_div(const Big& a, const Big& b) {
  Big q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void axpy(BigRow& y, const Big& q, const BigRow& x) {
  if (q == 0) return;
  for (std::size_t k = 0; k < y.size(); ++k) y[k] -= q * x[k];
}

/// In-place row HNF of h; u accumulates the same row operations. Returns the pivot columns.
std::vector<std::size_t> hnf(BigMatrix& h, BigMatrix* u, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t p = 0;
  const std::size_t r = h.size();
  for (std::size_t col = 0; col < cols && p < r; ++col) {
    while (true) {
      std::size_t best = r;
      for (std::size_t i = p; i < r; ++i)
        if (h[i][col] != 0 && (best == r || abs(h[i][col]) < abs(h[best][col]))) best = i;
      if (best == r) break;
      std::swap(h[p], h[best]);
      if (u) std::swap((*u)[p], (*u)[best]);
      bool done = true;
      for (std::size_t i = p + 1; i < r; ++i) {
        if (h[i][col] == 0) continue;
        const Big q = floor_div(h[i][col], h[p][col]);
        axpy(h[i], q, h[p]);
        if (u) axpy((*u)[i], q, (*u)[p]);
        if (h[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (p >= r || h[p][col] == 0) continue;
    if (h[p][col] < 0) {
      for (auto& x : h[p]) x = -x;
      if (u)
        for (auto& x : (*u)[p]) x = -x;
    }
    for (std::size_t i = 0; i < p; ++i) {
      const Big q = floor_div(h[i][col], h[p][col]);
      axpy(h[i], q, h[p]);
      if (u) axpy((*u)[i], q, (*u)[p]);
    }
    pivots.push_back(col);
    ++p;
  }
  return pivots;
}

BigMatrix identity(std::size_t n) {
  BigMatrix m(n, BigRow(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

bool member(BigRow v, const BigMatrix& h, const std::vector<std::size_t>& pivots) {
  for (std::size_t p = 0; p < pivots.size(); ++p) {
    const std::size_t col = pivots[p];
    if (v[col] == 0) continue;
    if (v[col] % h[p][col] != 0) return false;
    axpy(v, v[col] / h[p][col], h[p]);
  }
  return std::all_of(v.begin(), v.end(), [](const Big& x) { return x == 0; });
}

/// Rows of m stacked with modulus * I (when modulus > 0).
BigMatrix with_modulus(const IntMatrix& m, std::size_t cols, std::int64_t modulus) {
  BigMatrix out = to_big(m, cols);
  if (modulus > 0)
    for (std::size_t j = 0; j < cols; ++j) {
      BigRow r(cols, 0);
      r[j] = modulus;
      out.push_back(std::move(r));
    }
  return out;
}

bool zero_mod(const BigRow& v, std::int64_t modulus) {
  for (const Big& x : v)
    if (modulus == 0 ? x != 0 : x % modulus != 0) return false;
  return true;
}

/// Generators of {x in Z^a : x A in mZ^b}.
BigMatrix preimage_of_zero(const IntMatrix& A, std::size_t a, std::size_t b, std::int64_t modulus) {
  BigMatrix s = with_modulus(A, b, modulus);
  BigMatrix u = identity(s.size());
  const auto pivots = hnf(s, &u, b);
  BigMatrix out;
  for (std::size_t i = pivots.size(); i < s.size(); ++i) out.emplace_back(u[i].begin(), u[i].begin() + static_cast<std::ptrdiff_t>(a));
  return out;
}

}  // namespace

IntMatrix hermite_form(const IntMatrix& m, std::size_t cols) {
  BigMatrix h = to_big(m, cols);
  const auto pivots = hnf(h, nullptr, cols);
  IntMatrix out;
  for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(to_small(h[i]));
  return out;
}

std::size_t rank(const IntMatrix& m, std::size_t cols) {
  BigMatrix h = to_big(m, cols);
  return hnf(h, nullptr, cols).size();
}

IntMatrix left_kernel(const IntMatrix& m, std::size_t cols) {
  BigMatrix h = to_big(m, cols);
  BigMatrix u = identity(h.size());
  const auto pivots = hnf(h, &u, cols);
  IntMatrix out;
  for (std::size_t i = pivots.size(); i < h.size(); ++i) out.push_back(to_small(u[i]));
  return out;
}

bool in_row_lattice(const IntVector& v, const IntMatrix& m, std::size_t cols) {
  BigMatrix h = to_big(m, cols);
  const auto pivots = hnf(h, nullptr, cols);
  return member(BigRow(v.begin(), v.end()), h, pivots);
}

std::vector<std::int64_t> elementary_divisors(const IntMatrix& m, std::size_t cols) {
  BigMatrix h = to_big(m, cols);
  std::size_t nr = h.size(), nc = cols;
  // Alternate row and column Hermite reductions until diagonal.
  for (int guard = 0; guard < 1000; ++guard) {
    hnf(h, nullptr, nc);
    BigMatrix t(nc, BigRow(nr, 0));
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) t[j][i] = h[i][j];
    hnf(t, nullptr, nr);
    h.assign(nr, BigRow(nc, 0));
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) h[i][j] = t[j][i];
    bool diagonal = true;
    for (std::size_t i = 0; i < nr && diagonal; ++i)
      for (std::size_t j = 0; j < nc; ++j)
        if (i != j && h[i][j] != 0) {
          diagonal = false;
          break;
        }
    if (diagonal) break;
  }
  std::vector<Big> d;
  for (std::size_t i = 0; i < std::min(nr, nc); ++i)
    if (h[i][i] != 0) d.push_back(abs(h[i][i]));
  // Enforce the divisibility chain.
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const Big g = boost::multiprecision::gcd(d[i], d[j]);
      const Big l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  return to_small(d);
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner, std::size_t cols) {
  IntMatrix out(a.size(), IntVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        std::int64_t prod, sum;
        if (__builtin_mul_overflow(a[i][k], b[k][j], &prod) || __builtin_add_overflow(out[i][j], prod, &sum))
          throw ArithmeticOverflow("integer matrix product");
        out[i][j] = sum;
      }
    }
  return out;
}

std::optional<IntVector> composite_witness(const IntMatrix& A, const IntMatrix& B, std::size_t b, std::size_t c,
                                           std::int64_t modulus) {
  const IntMatrix P = multiply(A, B, b, c);
  for (std::size_t i = 0; i < P.size(); ++i)
    if (!zero_mod(BigRow(P[i].begin(), P[i].end()), modulus)) {
      IntVector e(A.size(), 0);
      e[i] = 1;
      return e;
    }
  return std::nullopt;
}

std::optional<IntVector> injectivity_witness(const IntMatrix& A, std::size_t a, std::size_t b, std::int64_t modulus) {
  for (const BigRow& x : preimage_of_zero(A, a, b, modulus))
    if (!zero_mod(x, modulus)) return to_small(x);
  return std::nullopt;
}

std::optional<IntVector> middle_witness(const IntMatrix& A, const IntMatrix& B, std::size_t a, std::size_t b,
                                        std::size_t c, std::int64_t modulus) {
  (void)a;
  BigMatrix image = with_modulus(A, b, modulus);
  const auto pivots = hnf(image, nullptr, b);
  for (const BigRow& y : preimage_of_zero(B, b, c, modulus))
    if (!member(y, image, pivots)) return to_small(y);
  return std::nullopt;
}

std::optional<IntVector> surjectivity_witness(const IntMatrix& B, std::size_t b, std::size_t c, std::int64_t modulus) {
  (void)b;
  BigMatrix image = with_modulus(B, c, modulus);
  const auto pivots = hnf(image, nullptr, c);
  for (std::size_t j = 0; j < c; ++j) {
    BigRow e(c, 0);
    e[j] = 1;
    if (!member(e, image, pivots)) return to_small(e);
  }
  return std::nullopt;
}

std::vector<std::int64_t> cokernel_invariants(const IntMatrix& B, std::size_t c, std::int64_t modulus) {
  IntMatrix stacked = B;
  if (modulus > 0)
    for (std::size_t j = 0; j < c; ++j) {
      IntVector r(c, 0);
      r[j] = modulus;
      stacked.push_back(std::move(r));
    }
  const auto d = elementary_divisors(stacked, c);
  std::vector<std::int64_t> out;
  for (auto x : d)
    if (x != 1) out.push_back(x);
  for (std::size_t k = d.size(); k < c; ++k) out.push_back(0);  // free part
  return out;
}

}  // namespace semisplit::lattice
