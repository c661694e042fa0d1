#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace petal {

using Vector = std::vector<double>;

/// Small dense row-major matrix. Quotients and test-scale networks only.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector column(std::size_t j) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Vector operator*(std::span<const double> x) const;
  Matrix operator*(double alpha) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;

  /// Copy with the listed rows and columns removed.
  Matrix without(std::span<const std::size_t> drop) const;

  /// Largest |A_ij - A_ji|.
  double asymmetry() const;
  double max_abs() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix outer(std::span<const double> a, std::span<const double> b);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
Vector axpy(double alpha, std::span<const double> x, std::span<const double> y);
Vector scaled(std::span<const double> x, double alpha);

}  // namespace petal
