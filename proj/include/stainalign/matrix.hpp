#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stainalign/error.hpp"
#include "stainalign/rng.hpp"

namespace stainalign {

using Vector = std::vector<double>;

// Dense row-major double matrix. Just enough linear algebra for the slide
// encoder, the losses, and the logistic-regression readout.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool same_shape(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  static Matrix random_normal(std::size_t rows, std::size_t cols, CounterRng& rng,
                              double scale = 1.0) {
    Matrix m(rows, cols);
    for (double& v : m.data_) v = scale * rng.next_normal();
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// y = M x
inline Vector matvec(const Matrix& m, std::span<const double> x) {
  if (x.size() != m.cols()) throw InvalidInputError("matvec: dimension mismatch");
  Vector y(m.rows(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) y[i] = dot(m.row(i), x);
  return y;
}

// y = M^T x
inline Vector matvec_t(const Matrix& m, std::span<const double> x) {
  if (x.size() != m.rows()) throw InvalidInputError("matvec_t: dimension mismatch");
  Vector y(m.cols(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) y[j] += r[j] * x[i];
  }
  return y;
}

// M += scale * a b^T
inline void add_outer(Matrix& m, std::span<const double> a, std::span<const double> b,
                      double scale = 1.0) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    const double ai = scale * a[i];
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += ai * b[j];
  }
}

// y += alpha * x
inline void axpy(Vector& y, double alpha, std::span<const double> x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

}  // namespace stainalign
