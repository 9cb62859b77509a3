#ifndef W22_MATRIX_HPP
#define W22_MATRIX_HPP

#include "w22/scalar.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace w22 {

/// Dense row-major matrix over an exact ring.
template <ScalarRing R>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = R(Rational(1));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero())
        return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const { return rows_ == cols_ && *this == transpose(); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("matrix shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& aik = a(i, k);
        if (aik.is_zero())
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero())
            out(i, j) = out(i, j) + aik * b(k, j);
      }
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i)
      out.data_[i] = out.data_[i] - b.data_[i];
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<R> data_;
};

template <ScalarRing R>
Matrix<R> power(const Matrix<R>& m, unsigned k) {
  Matrix<R> out = Matrix<R>::identity(m.rows());
  for (unsigned i = 0; i < k; ++i)
    out = out * m;
  return out;
}

template <ScalarRing R>
std::size_t term_count(const R& x) {
  if constexpr (requires { x.size(); })
    return x.size();
  else
    return x.is_zero() ? 0 : 1;
}

/// Fraction-free (Bareiss) determinant with row pivoting. Exact in any integral domain.
template <ScalarRing R>
R determinant(Matrix<R> a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0)
    return R(Rational(1));
  R prev(Rational(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Pick the nonzero pivot with the fewest terms to keep intermediate growth down.
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a(i, k).is_zero())
        continue;
      if (piv == n || term_count(a(i, k)) < term_count(a(piv, k)))
        piv = i;
    }
    if (piv == n)
      return R();
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a(k, j), a(piv, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = divide_exact(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  R d = a(n - 1, n - 1);
  return negate ? -d : d;
}

/// Reduced row echelon form over the rationals; returns pivot columns.
std::vector<std::size_t> rref(Matrix<Rational>& m);

std::size_t rank(Matrix<Rational> m);

/// Basis of the right null space {x : m x = 0}, one vector per free column,
/// normalized so the free coordinate is 1.
std::vector<std::vector<Rational>> kernel(Matrix<Rational> m);

} // namespace w22

#endif
