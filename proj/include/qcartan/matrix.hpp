#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qcartan/laurent.hpp"
#include "qcartan/partitions.hpp"

namespace qcartan {

/// Dense row-major matrix over an exact ring; T() must be zero and T(1L) one.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1L);
    return m;
  }

  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <class U, class F>
  Matrix<U> map(F&& f) const {
    Matrix<U> out(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  bool is_upper_triangular() const {
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < i && j < cols_; ++j)
        if (!((*this)(i, j) == T())) return false;
    return true;
  }

  void swap_rows(size_t a, size_t b) {
    for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(size_t a, size_t b) {
    for (size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == T()) continue;
      for (size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) == T()) continue;
        c(i, j) += a(i, k) * b(k, j);
      }
    }
  return c;
}

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == T()) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l) c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return c;
}

template <class T>
Matrix<T> direct_sum(const std::vector<Matrix<T>>& blocks) {
  size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix<T> out(r, c);
  size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (size_t i = 0; i < b.rows(); ++i)
      for (size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

using QMatrix = Matrix<mpq_class>;
using ZMatrix = Matrix<mpz_class>;
using LMatrix = Matrix<LaurentPoly>;

/// Exact inverse by Gauss-Jordan elimination; throws std::domain_error if singular.
QMatrix inverse(const QMatrix& m);
mpq_class determinant(const QMatrix& m);

QMatrix to_rational(const ZMatrix& m);
LMatrix to_laurent(const QMatrix& m);
LMatrix to_laurent(const ZMatrix& m);

/// Entrywise substitution v = theta.
QMatrix specialize_entries(const LMatrix& m, const mpq_class& theta);

LMatrix bar_transpose(const LMatrix& m);

bool all_integral(const LMatrix& m);

using Label = std::variant<Partition, Multipartition>;

std::string label_string(const Label& l);

template <class T>
struct LabeledMatrix {
  std::vector<Label> row_labels;
  std::vector<Label> col_labels;
  Matrix<T> entries;
  std::string provenance;

  size_t size() const { return entries.rows(); }
};

template <class T>
LabeledMatrix<T> operator*(const LabeledMatrix<T>& a, const LabeledMatrix<T>& b) {
  if (a.col_labels != b.row_labels) throw std::invalid_argument("labeled product: index sets differ");
  return {a.row_labels, b.col_labels, a.entries * b.entries, a.provenance + "*" + b.provenance};
}

std::vector<Label> as_labels(const std::vector<Partition>& v);
std::vector<Label> as_labels(const std::vector<Multipartition>& v);

}  // namespace qcartan
