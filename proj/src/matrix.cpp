#include "gha/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace gha {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, const Rational& fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& entries) {
  RationalMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& columns) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Rational> RationalMatrix::column(std::size_t c) const {
  std::vector<Rational> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool RationalMatrix::symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Rational& x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(l, j).is_zero()) out(i, j) += x * b(l, j);
      }
    }
  }
  return out;
}

std::string RationalMatrix::to_csv() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c);
    }
    os << '\n';
  }
  return os.str();
}

namespace {

void make_primitive(std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& x : v) {
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

bool EchelonBasis::insert(const std::vector<Rational>& v) {
  if (v.size() != dimension_) throw std::invalid_argument("echelon basis: dimension mismatch");
  if (basis_.size() == dimension_) return false;

  mpz_class den = 1;
  for (const auto& x : v) {
    const mpz_class d = x.denominator();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> w(dimension_);
  bool nonzero = false;
  for (std::size_t i = 0; i < dimension_; ++i) {
    w[i] = v[i].numerator() * (den / v[i].denominator());
    nonzero = nonzero || w[i] != 0;
  }
  if (!nonzero) return false;
  make_primitive(w);

  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const std::size_t p = pivots_[b];
    if (w[p] == 0) continue;
    const mpz_class scale_w = basis_[b][p];
    const mpz_class scale_b = w[p];
    for (std::size_t i = 0; i < dimension_; ++i) w[i] = w[i] * scale_w - basis_[b][i] * scale_b;
    make_primitive(w);
  }
  std::size_t pivot = dimension_;
  for (std::size_t i = 0; i < dimension_; ++i) {
    if (w[i] != 0) {
      pivot = i;
      break;
    }
  }
  if (pivot == dimension_) return false;

  // Keep the basis fully reduced on pivot columns so later reductions only
  // touch each pivot once.
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    if (basis_[b][pivot] == 0) continue;
    const mpz_class scale_b = w[pivot];
    const mpz_class scale_w = basis_[b][pivot];
    for (std::size_t i = 0; i < dimension_; ++i) basis_[b][i] = basis_[b][i] * scale_b - w[i] * scale_w;
    make_primitive(basis_[b]);
  }
  basis_.push_back(std::move(w));
  pivots_.push_back(pivot);
  return true;
}

std::size_t rank_exact(const RationalMatrix& m) {
  // Rank of the column space equals rank of the row space; eliminate along
  // the shorter dimension.
  if (m.rows() <= m.cols()) {
    EchelonBasis basis(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
    return basis.rank();
  }
  EchelonBasis basis(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) basis.insert(m.column(c));
  return basis.rank();
}

}  // namespace gha
