#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "intbm/big_rational.hpp"

namespace intbm {

/// Dense row-major matrix of exact rationals. Rows and columns are numbered from 0.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);

  static ExactMatrix identity(std::size_t size);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const BigRational& operator()(std::size_t row, std::size_t col) const { return data_[row * cols_ + col]; }
  BigRational& operator()(std::size_t row, std::size_t col) { return data_[row * cols_ + col]; }

  ExactMatrix transpose() const;
  /// Upper-left rows x cols block.
  ExactMatrix leading_block(std::size_t rows, std::size_t cols) const;

  bool is_lower_triangular() const;
  bool is_symmetric() const;
  bool is_identity() const;

  /// Exact Gauss-Jordan inverse; throws std::domain_error when singular.
  ExactMatrix inverse() const;

  Eigen::MatrixXd to_double() const;
  Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> to_long_double() const;

  friend ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs);
  friend ExactMatrix operator+(const ExactMatrix& lhs, const ExactMatrix& rhs);
  friend ExactMatrix operator-(const ExactMatrix& lhs, const ExactMatrix& rhs);
  friend bool operator==(const ExactMatrix& lhs, const ExactMatrix& rhs) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigRational> data_;
};

/// (M*)_{jk} = (-1)^{j+k} M_{jk}. An involution; requires a square matrix.
ExactMatrix star(const ExactMatrix& m);

/// A family of matrices given by an entry rule rather than stored data, so every
/// realization agrees with every other on the shared index range.
class DimFreeMatrix {
 public:
  using EntryRule = std::function<BigRational(std::size_t row, std::size_t col)>;
  using ZeroPredicate = std::function<bool(std::size_t row, std::size_t col)>;

  DimFreeMatrix(std::string name, EntryRule rule, ZeroPredicate structural_zero = {});

  const std::string& name() const { return name_; }
  BigRational entry(std::size_t row, std::size_t col) const;
  bool is_structural_zero(std::size_t row, std::size_t col) const;

  /// (dim+1) x (dim+1) realization.
  ExactMatrix realize(std::size_t dim) const { return realize(dim + 1, dim + 1); }
  ExactMatrix realize(std::size_t rows, std::size_t cols) const;

 private:
  std::string name_;
  EntryRule rule_;
  ZeroPredicate structural_zero_;
};

}  // namespace intbm
