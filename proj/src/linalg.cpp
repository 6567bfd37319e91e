#include "stromver/linalg.hpp"

namespace stromver {

Mat Mat::transpose() const {
  Mat m(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Mat Mat::conjugate() const {
  Mat m(rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).conj();
  return m;
}

GaussRational Mat::trace() const {
  if (rows_ != cols_) throw DimensionMismatch("trace of non-square matrix");
  GaussRational t;
  for (size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatch("matrix add shape");
  Mat m(a.rows_, a.cols_);
  for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
  return m;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatch("matrix sub shape");
  Mat m(a.rows_, a.cols_);
  for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
  return m;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix mul shape");
  Mat m(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j)
        m(i, j) += a(i, k) * b(k, j);
    }
  return m;
}

Mat operator*(const GaussRational& c, const Mat& m) {
  Mat r(m.rows_, m.cols_);
  for (size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = c * m.a_[i];
  return r;
}

std::vector<GaussRational> Mat::apply(
    const std::vector<GaussRational>& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix apply shape");
  std::vector<GaussRational> r(rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

std::vector<size_t> Mat::rref() {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols_ && row < rows_; ++col) {
    size_t piv = row;
    while (piv < rows_ && (*this)(piv, col).is_zero()) ++piv;
    if (piv == rows_) continue;
    if (piv != row)
      for (size_t j = 0; j < cols_; ++j)
        std::swap((*this)(piv, j), (*this)(row, j));
    GaussRational inv = (*this)(row, col).inv();
    for (size_t j = col; j < cols_; ++j) (*this)(row, j) *= inv;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == row || (*this)(i, col).is_zero()) continue;
      GaussRational f = (*this)(i, col);
      for (size_t j = col; j < cols_; ++j)
        (*this)(i, j) -= f * (*this)(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t Mat::rank() const {
  Mat m = *this;
  return m.rref().size();
}

std::vector<std::vector<GaussRational>> Mat::kernel() const {
  Mat m = *this;
  std::vector<size_t> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<GaussRational>> basis;
  for (size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<GaussRational> v(cols_);
    v[free] = GaussRational(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

GaussRational Mat::det() const {
  if (rows_ != cols_) throw DimensionMismatch("det of non-square matrix");
  Mat m = *this;
  GaussRational d(1);
  for (size_t col = 0; col < cols_; ++col) {
    size_t piv = col;
    while (piv < rows_ && m(piv, col).is_zero()) ++piv;
    if (piv == rows_) return GaussRational(0);
    if (piv != col) {
      for (size_t j = 0; j < cols_; ++j) std::swap(m(piv, j), m(col, j));
      d = -d;
    }
    d *= m(col, col);
    GaussRational inv = m(col, col).inv();
    for (size_t i = col + 1; i < rows_; ++i) {
      if (m(i, col).is_zero()) continue;
      GaussRational f = m(i, col) * inv;
      for (size_t j = col; j < cols_; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return d;
}

Mat Mat::inverse() const {
  if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
  Mat aug(rows_, 2 * cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_ + i) = GaussRational(1);
  }
  auto pivots = aug.rref();
  if (pivots.size() != rows_ || pivots.back() >= cols_)
    throw std::domain_error("singular matrix");
  Mat inv(rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
  return inv;
}

bool Mat::solve(const std::vector<GaussRational>& b,
                std::vector<GaussRational>& x) const {
  if (b.size() != rows_) throw DimensionMismatch("solve rhs shape");
  Mat aug(rows_, cols_ + 1);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return false;  // inconsistent
  x.assign(cols_, GaussRational());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
  return true;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

std::vector<std::vector<GaussRational>> span_basis(
    const std::vector<std::vector<GaussRational>>& vecs) {
  if (vecs.empty()) return {};
  Mat m(vecs.size(), vecs[0].size());
  for (size_t i = 0; i < vecs.size(); ++i)
    for (size_t j = 0; j < vecs[0].size(); ++j) m(i, j) = vecs[i][j];
  auto pivots = m.rref();
  std::vector<std::vector<GaussRational>> basis;
  for (size_t r = 0; r < pivots.size(); ++r) {
    std::vector<GaussRational> v(vecs[0].size());
    for (size_t j = 0; j < v.size(); ++j) v[j] = m(r, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

size_t span_rank(const std::vector<std::vector<GaussRational>>& vecs) {
  return span_basis(vecs).size();
}

bool in_span(const std::vector<std::vector<GaussRational>>& basis,
             const std::vector<GaussRational>& v) {
  auto with = basis;
  with.push_back(v);
  return span_rank(with) == span_rank(basis);
}

}  // namespace stromver
