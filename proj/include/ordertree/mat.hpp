#pragma once

#include <initializer_list>
#include <vector>

#include "ordertree/common.hpp"

namespace ordertree {

template <typename T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  Mat(int rows, int cols, std::initializer_list<T> vals) : rows_(rows), cols_(cols), a_(vals) {
    OT_ASSERT(static_cast<int>(a_.size()) == rows * cols, "Mat initializer size");
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

  Mat row(int i) const {
    Mat r(1, cols_);
    for (int c = 0; c < cols_; ++c) r(0, c) = (*this)(i, c);
    return r;
  }

  std::vector<T> row_vec(int i) const {
    std::vector<T> r(cols_);
    for (int c = 0; c < cols_; ++c) r[c] = (*this)(i, c);
    return r;
  }

  void set_row(int i, const std::vector<T>& v) {
    OT_ASSERT(static_cast<int>(v.size()) == cols_, "set_row size");
    for (int c = 0; c < cols_; ++c) (*this)(i, c) = v[c];
  }

  const std::vector<T>& data() const { return a_; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

template <typename T>
Mat<T> mat_mul(const Mat<T>& A, const Mat<T>& B) {
  OT_ASSERT(A.cols() == B.rows(), "mat_mul shapes");
  Mat<T> C(A.rows(), B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int k = 0; k < A.cols(); ++k) {
      const T& aik = A(i, k);
      if (aik == T(0)) continue;
      for (int j = 0; j < B.cols(); ++j) C(i, j) += aik * B(k, j);
    }
  return C;
}

template <typename T>
Mat<T> transpose(const Mat<T>& A) {
  Mat<T> B(A.cols(), A.rows());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) B(j, i) = A(i, j);
  return B;
}

template <typename T>
std::vector<T> vec_mat_mul(const std::vector<T>& v, const Mat<T>& A) {
  OT_ASSERT(static_cast<int>(v.size()) == A.rows(), "vec_mat_mul shapes");
  std::vector<T> r(A.cols(), T(0));
  for (int i = 0; i < A.rows(); ++i) {
    if (v[i] == T(0)) continue;
    for (int j = 0; j < A.cols(); ++j) r[j] += v[i] * A(i, j);
  }
  return r;
}

template <typename T>
Mat<T> vstack(const Mat<T>& A, const Mat<T>& B) {
  OT_ASSERT(A.cols() == B.cols(), "vstack cols");
  Mat<T> C(A.rows() + B.rows(), A.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) C(i, j) = A(i, j);
  for (int i = 0; i < B.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) C(A.rows() + i, j) = B(i, j);
  return C;
}

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

}  // namespace ordertree
