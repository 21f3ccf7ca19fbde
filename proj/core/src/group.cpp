#include "semisplit/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "semisplit/error.hpp"

namespace semisplit {

namespace {

std::int64_t det(const std::array<std::array<std::int64_t, kMaxFreeRank>, kMaxFreeRank>& m, int r) {
  if (r == 0) return 1;
  if (r == 1) return m[0][0];
  if (r == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

void check_rank(int r) {
  if (r < 0 || r > kMaxFreeRank)
    throw NotAGroup("free rank must be in [0, " + std::to_string(kMaxFreeRank) + "]");
}

}  // namespace

BaseGroup BaseGroup::from_table(const std::vector<std::vector<int>>& table, int free_rank) {
  check_rank(free_rank);
  const int n = static_cast<int>(table.size());
  if (n == 0 || n > kMaxFiniteOrder)
    throw NotAGroup("finite part must have order in [1, " + std::to_string(kMaxFiniteOrder) + "]");
  BaseGroup g;
  g.order_ = n;
  g.rank_ = free_rank;
  g.table_.assign(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) throw NotAGroup("table is not square");
    for (int j = 0; j < n; ++j) {
      const int v = table[i][j];
      if (v < 0 || v >= n) throw NotAGroup("table entry out of range");
      g.table_[static_cast<std::size_t>(i * n + j)] = v;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (g.table(0, i) != i || g.table(i, 0) != i) throw NotAGroup("index 0 is not the identity");
    std::vector<bool> row(n), col(n);
    for (int j = 0; j < n; ++j) {
      row[g.table(i, j)] = true;
      col[g.table(j, i)] = true;
    }
    if (std::find(row.begin(), row.end(), false) != row.end() ||
        std::find(col.begin(), col.end(), false) != col.end())
      throw NotAGroup("table is not a Latin square");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.table(g.table(a, b), c) != g.table(a, g.table(b, c)))
          throw NotAGroup("associativity fails at (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")");
  g.inverse_.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.table(i, j) == 0) g.inverse_[static_cast<std::size_t>(i)] = j;
  return g;
}

BaseGroup BaseGroup::from_permutations(const std::vector<std::vector<int>>& gens, int free_rank) {
  using Perm = std::vector<int>;
  std::size_t degree = gens.empty() ? 0 : gens.front().size();
  for (const auto& p : gens) {
    if (p.size() != degree) throw NotAGroup("permutation generators of different degree");
    Perm sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < degree; ++i)
      if (sorted[i] != static_cast<int>(i)) throw NotAGroup("generator is not a permutation");
  }
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  // compose(p, q) = p then q, i.e. x -> q[p[x]]
  auto compose = [](const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<std::size_t>(p[i])];
    return r;
  };
  std::vector<Perm> elems{id};
  std::map<Perm, int> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Perm next = compose(elems[head], g);
      if (!index.count(next)) {
        if (static_cast<int>(elems.size()) >= kMaxFiniteOrder)
          throw NotAGroup("generated group exceeds order cap");
        index.emplace(next, static_cast<int>(elems.size()));
        elems.push_back(std::move(next));
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = index.at(compose(elems[i], elems[j]));
  return from_table(table, free_rank);
}

FElem BaseGroup::mul(const FElem& a, const FElem& b) const {
  FElem r;
  r.idx = table(a.idx, b.idx);
  for (int k = 0; k < rank_; ++k) r.z[k] = a.z[k] + b.z[k];
  return r;
}

FElem BaseGroup::inv(const FElem& a) const {
  FElem r;
  r.idx = inverse_[static_cast<std::size_t>(a.idx)];
  for (int k = 0; k < rank_; ++k) r.z[k] = -a.z[k];
  return r;
}

FElem BaseGroup::lattice_generator(int k) const {
  if (k < 0 || k >= rank_) throw ParseError("lattice generator z" + std::to_string(k) + " out of range");
  FElem r;
  r.z[k] = 1;
  return r;
}

std::vector<FElem> BaseGroup::finite_elements() const {
  std::vector<FElem> out(static_cast<std::size_t>(order_));
  for (int i = 0; i < order_; ++i) out[static_cast<std::size_t>(i)].idx = i;
  return out;
}

std::vector<FElem> BaseGroup::ball(int radius) const {
  std::vector<FElem> out = finite_elements();
  for (int k = 0; k < rank_; ++k) {
    std::vector<FElem> next;
    for (const auto& e : out)
      for (int v = -radius; v <= radius; ++v) {
        FElem x = e;
        x.z[k] = v;
        next.push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

int BaseGroup::element_order(const FElem& a) const {
  for (int k = 0; k < rank_; ++k)
    if (a.z[k] != 0) return 0;
  int ord = 1;
  for (int x = a.idx; x != 0; x = table(x, a.idx)) ++ord;
  return ord;
}

GroupAut GroupAut::identity(const BaseGroup& g) {
  GroupAut a;
  a.perm_.resize(static_cast<std::size_t>(g.finite_order()));
  std::iota(a.perm_.begin(), a.perm_.end(), 0);
  a.rank_ = g.free_rank();
  for (int k = 0; k < a.rank_; ++k) a.lattice_[k][k] = 1;
  return a;
}

GroupAut GroupAut::create(const BaseGroup& g, std::vector<int> perm,
                          std::vector<std::vector<std::int64_t>> lattice) {
  const int n = g.finite_order();
  if (static_cast<int>(perm.size()) != n) throw NotAnAutomorphism("permutation has wrong length");
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (sorted[static_cast<std::size_t>(i)] != i) throw NotAnAutomorphism("not a permutation of F0");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (perm[static_cast<std::size_t>(g.table(a, b))] !=
          g.table(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]))
        throw NotAnAutomorphism("permutation does not respect the multiplication table at (" +
                                std::to_string(a) + "," + std::to_string(b) + ")");
  GroupAut out;
  out.perm_ = std::move(perm);
  out.rank_ = g.free_rank();
  if (lattice.empty()) {
    for (int k = 0; k < out.rank_; ++k) out.lattice_[k][k] = 1;
  } else {
    if (static_cast<int>(lattice.size()) != out.rank_) throw NotAnAutomorphism("lattice map has wrong size");
    for (int i = 0; i < out.rank_; ++i) {
      if (static_cast<int>(lattice[static_cast<std::size_t>(i)].size()) != out.rank_)
        throw NotAnAutomorphism("lattice map has wrong size");
      for (int j = 0; j < out.rank_; ++j) out.lattice_[i][j] = lattice[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  const std::int64_t d = det(out.lattice_, out.rank_);
  if (d != 1 && d != -1) throw NotAnAutomorphism("lattice map has determinant " + std::to_string(d));
  return out;
}

GroupAut GroupAut::inner(const BaseGroup& g, const FElem& c) {
  std::vector<int> perm(static_cast<std::size_t>(g.finite_order()));
  FElem ci = g.inv(c);
  for (int i = 0; i < g.finite_order(); ++i) {
    FElem x;
    x.idx = i;
    perm[static_cast<std::size_t>(i)] = g.mul(g.mul(ci, x), c).idx;
  }
  return create(g, std::move(perm), {});
}

FElem GroupAut::apply(const FElem& x) const {
  FElem r;
  r.idx = perm_[static_cast<std::size_t>(x.idx)];
  for (int i = 0; i < rank_; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < rank_; ++j) s += lattice_[i][j] * x.z[j];
    r.z[i] = s;
  }
  return r;
}

GroupAut GroupAut::inverse() const {
  GroupAut r;
  r.rank_ = rank_;
  r.perm_.assign(perm_.size(), 0);
  for (std::size_t i = 0; i < perm_.size(); ++i) r.perm_[static_cast<std::size_t>(perm_[i])] = static_cast<int>(i);
  // Unimodular inverse via the adjugate; det is +-1.
  const std::int64_t d = det(lattice_, rank_);
  const auto& m = lattice_;
  auto& o = r.lattice_;
  if (rank_ == 1) {
    o[0][0] = d * 1;
  } else if (rank_ == 2) {
    o[0][0] = d * m[1][1];
    o[0][1] = -d * m[0][1];
    o[1][0] = -d * m[1][0];
    o[1][1] = d * m[0][0];
  } else if (rank_ == 3) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const int r1 = (j + 1) % 3, r2 = (j + 2) % 3, c1 = (i + 1) % 3, c2 = (i + 2) % 3;
        o[i][j] = d * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]);
      }
  }
  return r;
}

GroupAut GroupAut::compose(const GroupAut& other) const {
  GroupAut r;
  r.rank_ = rank_;
  r.perm_.assign(perm_.size(), 0);
  for (std::size_t i = 0; i < perm_.size(); ++i)
    r.perm_[i] = perm_[static_cast<std::size_t>(other.perm_[i])];
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < rank_; ++k) s += lattice_[i][k] * other.lattice_[k][j];
      r.lattice_[i][j] = s;
    }
  return r;
}

std::vector<std::vector<std::int64_t>> GroupAut::lattice() const {
  std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(rank_),
                                             std::vector<std::int64_t>(static_cast<std::size_t>(rank_)));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = lattice_[i][j];
  return out;
}

}  // namespace semisplit
