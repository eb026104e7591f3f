#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "dilp/core.hpp"

namespace dilp {

// Dense row-major matrix. Zero-row matrices are allowed (an empty
// equality system); zero columns only arise as intermediate values.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int r, int c) : rows_(r), cols_(c), a_(static_cast<size_t>(r) * c, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_) fail(ErrorKind::Dimension, "ragged matrix literal");
      for (auto& x : r) a_.push_back(x);
    }
  }
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rs, int cols) {
    Matrix m(static_cast<int>(rs.size()), cols);
    for (int i = 0; i < m.rows_; ++i) {
      if (static_cast<int>(rs[i].size()) != cols) fail(ErrorKind::Dimension, "ragged rows");
      for (int j = 0; j < cols; ++j) m(i, j) = rs[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  std::vector<T> row(int i) const {
    return std::vector<T>(a_.begin() + static_cast<size_t>(i) * cols_,
                          a_.begin() + static_cast<size_t>(i + 1) * cols_);
  }
  std::vector<T> col(int j) const {
    std::vector<T> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_row(int i, const std::vector<T>& v) {
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }
  void set_col(int j, const std::vector<T>& v) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Matrix select_rows(const std::vector<int>& idx) const {
    Matrix m(static_cast<int>(idx.size()), cols_);
    for (size_t k = 0; k < idx.size(); ++k)
      for (int j = 0; j < cols_; ++j) m(static_cast<int>(k), j) = (*this)(idx[k], j);
    return m;
  }
  Matrix select_cols(const std::vector<int>& idx) const {
    Matrix m(rows_, static_cast<int>(idx.size()));
    for (int i = 0; i < rows_; ++i)
      for (size_t k = 0; k < idx.size(); ++k) m(i, static_cast<int>(k)) = (*this)(i, idx[k]);
    return m;
  }
  Matrix block(int r0, int c0, int nr, int nc) const {
    Matrix m(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }
  void swap_rows(int i, int k) {
    if (i == k) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swap_cols(int j, int k) {
    if (j == k) return;
    for (int i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
  }
  // row i += f * row k
  void add_row(int i, int k, const T& f) {
    if (f == 0) return;
    for (int j = 0; j < cols_; ++j) (*this)(i, j) += f * (*this)(k, j);
  }
  // col j += f * col k
  void add_col(int j, int k, const T& f) {
    if (f == 0) return;
    for (int i = 0; i < rows_; ++i) (*this)(i, j) += f * (*this)(i, k);
  }
  void negate_row(int i) {
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }
  void negate_col(int j) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
  }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) fail(ErrorKind::Dimension, "matrix product shape mismatch");
    Matrix r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const T& a = x(i, k);
        if (a == 0) continue;
        for (int j = 0; j < y.cols_; ++j) r(i, j) += a * y(k, j);
      }
    return r;
  }
  friend std::vector<T> operator*(const Matrix& x, const std::vector<T>& v) {
    if (x.cols_ != static_cast<int>(v.size())) fail(ErrorKind::Dimension, "matrix-vector shape mismatch");
    std::vector<T> r(x.rows_, T(0));
    for (int i = 0; i < x.rows_; ++i)
      for (int j = 0; j < x.cols_; ++j) r[i] += x(i, j) * v[j];
    return r;
  }

  static Matrix vstack(const Matrix& top, const Matrix& bottom) {
    if (top.cols_ != bottom.cols_) fail(ErrorKind::Dimension, "vstack column mismatch");
    Matrix m(top.rows_ + bottom.rows_, top.cols_);
    for (int i = 0; i < top.rows_; ++i) m.set_row(i, top.row(i));
    for (int i = 0; i < bottom.rows_; ++i) m.set_row(top.rows_ + i, bottom.row(i));
    return m;
  }
  static Matrix hstack(const Matrix& l, const Matrix& r) {
    if (l.rows_ != r.rows_) fail(ErrorKind::Dimension, "hstack row mismatch");
    Matrix m(l.rows_, l.cols_ + r.cols_);
    for (int i = 0; i < l.rows_; ++i) {
      for (int j = 0; j < l.cols_; ++j) m(i, j) = l(i, j);
      for (int j = 0; j < r.cols_; ++j) m(i, l.cols_ + j) = r(i, j);
    }
    return m;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> a_;
};

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;

RatMat to_rat(const IntMat& m);
IntMat to_int(const RatMat& m);  // requires integral entries
Int max_abs(const IntMat& m);
std::string str(const IntMat& m);  // rows of whitespace-separated integers
IntMat diag(const IntVec& d);

}  // namespace dilp
