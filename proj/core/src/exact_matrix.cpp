#include "intbm/exact_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace intbm {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t size) {
  ExactMatrix out(size, size);
  for (std::size_t i = 0; i < size; ++i) out(i, i) = 1;
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

ExactMatrix ExactMatrix::leading_block(std::size_t rows, std::size_t cols) const {
  if (rows > rows_ || cols > cols_) throw std::out_of_range("ExactMatrix::leading_block: block exceeds matrix");
  ExactMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(i, j);
  return out;
}

bool ExactMatrix::is_lower_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

bool ExactMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool ExactMatrix::is_identity() const { return is_square() && *this == identity(rows_); }

ExactMatrix ExactMatrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("ExactMatrix::inverse: matrix is not square");
  const std::size_t n = rows_;
  ExactMatrix work = *this;
  ExactMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("ExactMatrix::inverse: matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const BigRational scale = BigRational(1) / work(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || work(row, col).is_zero()) continue;
      const BigRational factor = work(row, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!work(col, j).is_zero()) work(row, j) -= factor * work(col, j);
        if (!inv(col, j).is_zero()) inv(row, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

Eigen::MatrixXd ExactMatrix::to_double() const {
  Eigen::MatrixXd out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).to_double();
  return out;
}

Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> ExactMatrix::to_long_double() const {
  Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).to_long_double();
  return out;
}

ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch in product");
  ExactMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const BigRational& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const BigRational& b = rhs(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  }
  return out;
}

ExactMatrix operator+(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) throw std::invalid_argument("ExactMatrix: shape mismatch in sum");
  ExactMatrix out = lhs;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

ExactMatrix operator-(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) throw std::invalid_argument("ExactMatrix: shape mismatch in difference");
  ExactMatrix out = lhs;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

ExactMatrix star(const ExactMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("star: matrix is not square");
  ExactMatrix out = m;
  for (std::size_t j = 0; j < m.rows(); ++j)
    for (std::size_t k = 0; k < m.cols(); ++k)
      if ((j + k) % 2 == 1) out(j, k) = -m(j, k);
  return out;
}

DimFreeMatrix::DimFreeMatrix(std::string name, EntryRule rule, ZeroPredicate structural_zero)
    : name_(std::move(name)), rule_(std::move(rule)), structural_zero_(std::move(structural_zero)) {}

bool DimFreeMatrix::is_structural_zero(std::size_t row, std::size_t col) const {
  return structural_zero_ && structural_zero_(row, col);
}

BigRational DimFreeMatrix::entry(std::size_t row, std::size_t col) const {
  if (is_structural_zero(row, col)) return BigRational(0);
  return rule_(row, col);
}

ExactMatrix DimFreeMatrix::realize(std::size_t rows, std::size_t cols) const {
  ExactMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = entry(i, j);
  return out;
}

}  // namespace intbm
