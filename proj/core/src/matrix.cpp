#include "semisplit/matrix.hpp"

#include "semisplit/error.hpp"
#include "semisplit/literal.hpp"

namespace semisplit {

RingMatrix::RingMatrix(RingTag tag, std::size_t rows, std::size_t cols)
    : tag_(std::move(tag)), rows_(rows), cols_(cols), data_(rows * cols, RingElem(tag_)) {}

RingMatrix RingMatrix::identity(const RingTag& tag, std::size_t n) {
  RingMatrix m(tag, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RingElem::scalar(tag, 1);
  return m;
}

RingMatrix RingMatrix::zero(const RingTag& tag, std::size_t rows, std::size_t cols) { return {tag, rows, cols}; }

RingMatrix RingMatrix::from_literals(const RingTag& tag, const std::vector<std::vector<std::string>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  RingMatrix m(tag, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ShapeMismatch("ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = parse_ring_literal(rows[i][j], tag);
  }
  return m;
}

RingMatrix RingMatrix::blocks(const RingMatrix& a, const RingMatrix& b, const RingMatrix& c, const RingMatrix& d) {
  return vstack(hstack(a, b), hstack(c, d));
}

RingMatrix RingMatrix::block_diag(const RingMatrix& a, const RingMatrix& b) {
  return blocks(a, zero(a.tag_, a.rows_, b.cols_), zero(a.tag_, b.rows_, a.cols_), b);
}

RingMatrix RingMatrix::hstack(const RingMatrix& a, const RingMatrix& b) {
  require_same_tag(a.tag_, b.tag_, "hstack");
  if (a.rows_ != b.rows_) throw ShapeMismatch("hstack: row counts differ");
  RingMatrix m(a.tag_, a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) m.at(i, a.cols_ + j) = b.at(i, j);
  }
  return m;
}

RingMatrix RingMatrix::vstack(const RingMatrix& a, const RingMatrix& b) {
  require_same_tag(a.tag_, b.tag_, "vstack");
  if (a.cols_ != b.cols_) throw ShapeMismatch("vstack: column counts differ");
  RingMatrix m(a.tag_, a.rows_ + b.rows_, a.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) m.at(a.rows_ + i, j) = b.at(i, j);
  return m;
}

RingMatrix RingMatrix::permutation(const RingTag& tag, const std::vector<std::size_t>& perm) {
  RingMatrix m(tag, perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m.at(i, perm[i]) = RingElem::scalar(tag, 1);
  return m;
}

RingMatrix RingMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeMismatch("block out of range");
  RingMatrix m(tag_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = at(r0 + i, c0 + j);
  return m;
}

bool RingMatrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

bool RingMatrix::is_identity() const {
  if (!is_square()) return false;
  const RingElem one = RingElem::scalar(tag_, 1);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i == j ? !(at(i, j) == one) : !at(i, j).is_zero()) return false;
  return true;
}

RingMatrix operator+(const RingMatrix& a, const RingMatrix& b) {
  require_same_tag(a.tag_, b.tag_, "matrix add");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("matrix add: shapes differ");
  RingMatrix m = a;
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
  return m;
}

RingMatrix operator-(const RingMatrix& a, const RingMatrix& b) {
  require_same_tag(a.tag_, b.tag_, "matrix sub");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("matrix sub: shapes differ");
  RingMatrix m = a;
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] -= b.data_[k];
  return m;
}

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
  require_same_tag(a.tag_, b.tag_, "matrix mul");
  if (a.cols_ != b.rows_)
    throw ShapeMismatch("matrix mul: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " times " +
                        std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  RingMatrix m(a.tag_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const RingElem& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const RingElem& y = b.at(k, j);
        if (!y.is_zero()) m.at(i, j) += x * y;
      }
    }
  return m;
}

RingMatrix RingMatrix::operator-() const {
  RingMatrix m = *this;
  for (auto& e : m.data_) e = -e;
  return m;
}

bool operator==(const RingMatrix& a, const RingMatrix& b) {
  return a.tag_ == b.tag_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RingMatrix RingMatrix::map(const RingTag& target, const std::function<RingElem(const RingElem&)>& f) const {
  RingMatrix m(target, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    RingElem e = f(data_[k]);
    require_same_tag(e.tag(), target, "matrix map");
    m.data_[k] = std::move(e);
  }
  return m;
}

RingMatrix RingMatrix::twisted(const GroupAut& a) const {
  RingMatrix m = *this;
  for (auto& e : m.data_) e = e.twisted(a);
  return m;
}

RingMatrix RingMatrix::retag(RingKind k) const {
  RingMatrix m(tag_.with_kind(k), rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i].retag(k);
  return m;
}

RingMatrix RingMatrix::left_scaled(const RingElem& s) const {
  RingMatrix m = *this;
  for (auto& e : m.data_) e = s * e;
  return m;
}

std::vector<std::vector<std::string>> RingMatrix::to_literals() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = print_ring_literal(at(i, j));
  return out;
}

std::string RingMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + print_ring_literal(at(i, j));
  }
  return s + "]";
}

}  // namespace semisplit
