#pragma once

#include <cstddef>
#include <vector>

#include "stromver/scalar.hpp"

namespace stromver {

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Dense matrix over Q(i). Row-major, exact arithmetic throughout; the
/// elimination routines pivot on the first nonzero entry (no magnitude
/// heuristics are meaningful over an exact field).
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = GaussRational(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  GaussRational& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const GaussRational& operator()(size_t i, size_t j) const {
    return a_[i * cols_ + j];
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  Mat transpose() const;
  Mat conjugate() const;
  Mat adjoint() const { return conjugate().transpose(); }
  GaussRational trace() const;

  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const GaussRational& c, const Mat& m);
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  std::vector<GaussRational> apply(const std::vector<GaussRational>& v) const;

  /// In-place reduced row echelon form; returns pivot column indices.
  std::vector<size_t> rref();

  size_t rank() const;

  /// Basis of the right kernel {x : Ax = 0}.
  std::vector<std::vector<GaussRational>> kernel() const;

  GaussRational det() const;
  Mat inverse() const;

  /// Solves Ax = b. Returns false if inconsistent; on success x is one
  /// solution (free variables set to zero).
  bool solve(const std::vector<GaussRational>& b,
             std::vector<GaussRational>& x) const;

 private:
  size_t rows_, cols_;
  std::vector<GaussRational> a_;
};

Mat commutator(const Mat& a, const Mat& b);

/// Rank of the span of the given vectors (rows of an implicit matrix).
size_t span_rank(const std::vector<std::vector<GaussRational>>& vecs);

/// Reduces `vecs` to a linearly independent spanning subset (echelon basis).
std::vector<std::vector<GaussRational>> span_basis(
    const std::vector<std::vector<GaussRational>>& vecs);

/// True iff v lies in the span of basis (over Q(i)).
bool in_span(const std::vector<std::vector<GaussRational>>& basis,
             const std::vector<GaussRational>& v);

}  // namespace stromver
