#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gha/rational.hpp"

namespace gha {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols, const Rational& fill = Rational(0));

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(const std::vector<Rational>& entries);
  /// Matrix whose j-th column is columns[j].
  static RationalMatrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;
  std::vector<Rational> column(std::size_t c) const;

  RationalMatrix transpose() const;
  bool symmetric() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  std::string to_csv() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Incrementally maintained row echelon basis over the integers. Vectors are
/// scaled to primitive integer vectors on entry; elimination is fraction-free
/// with content removal after every step.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dimension) : dimension_(dimension) {}

  /// Reduces v against the basis; returns true (and keeps it) if v was
  /// linearly independent of the vectors seen so far.
  bool insert(const std::vector<Rational>& v);

  std::size_t rank() const { return basis_.size(); }
  std::size_t dimension() const { return dimension_; }

 private:
  std::size_t dimension_;
  std::vector<std::vector<mpz_class>> basis_;
  std::vector<std::size_t> pivots_;
};

/// Exact rank over the rationals.
std::size_t rank_exact(const RationalMatrix& m);

}  // namespace gha
