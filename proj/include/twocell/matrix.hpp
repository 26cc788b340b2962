#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twocell/scalar.hpp"

namespace twocell {

/// Dense row-major matrix over an exact ring (long long or Scalar).
template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), d_(size_t(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int r, int c) { return d_[size_t(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return d_[size_t(r) * cols_ + c]; }

  Mat operator*(const Mat& o) const {
    Mat out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& v = (*this)(i, k);
        if (v == T(0)) continue;
        for (int j = 0; j < o.cols_; ++j) out(i, j) += v * o(k, j);
      }
    return out;
  }

  Mat operator+(const Mat& o) const {
    Mat out(rows_, cols_);
    for (size_t i = 0; i < d_.size(); ++i) out.d_[i] = d_[i] + o.d_[i];
    return out;
  }

  Mat operator-(const Mat& o) const {
    Mat out(rows_, cols_);
    for (size_t i = 0; i < d_.size(); ++i) out.d_[i] = d_[i] - o.d_[i];
    return out;
  }

  Mat scaled(const T& s) const {
    Mat out(rows_, cols_);
    for (size_t i = 0; i < d_.size(); ++i) out.d_[i] = d_[i] * s;
    return out;
  }

  Mat& operator+=(const Mat& o) { return *this = *this + o; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const T& v : d_)
      if (!(v == T(0))) return false;
    return true;
  }

  std::string str() const {
    std::string out = "[";
    for (int i = 0; i < rows_; ++i) {
      out += i ? ",[" : "[";
      for (int j = 0; j < cols_; ++j) {
        if (j) out += ",";
        if constexpr (std::is_same_v<T, Scalar>)
          out += (*this)(i, j).str();
        else
          out += std::to_string((*this)(i, j));
      }
      out += "]";
    }
    return out + "]";
  }

 private:
  int rows_, cols_;
  std::vector<T> d_;
};

using IntMat = Mat<long long>;
using ScalMat = Mat<Scalar>;

inline ScalMat to_scalar(const IntMat& m) {
  ScalMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = Scalar(m(i, j));
  return out;
}

using ScalVec = std::vector<Scalar>;

}  // namespace twocell
