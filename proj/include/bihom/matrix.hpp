#pragma once

#include <cstddef>
#include <vector>

#include "bihom/rational.hpp"

namespace bihom {

using Vec = std::vector<Rational>;

// Dense row-major matrix over the rationals.  Dimensions may be zero; all
// operations treat 0xN and Nx0 matrices as honest degenerate cases.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;

  // Matrix-vector product.
  Vec apply(const Vec& v) const;

  // Column c as a vector.
  Vec col(std::size_t c) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_identity() const;

  // Integer power; requires a square matrix.  pow(0) is the identity.
  Matrix pow(unsigned long e) const;

  static Matrix block_diag(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Elementary vector helpers.
Vec basis_vec(std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);
// a += c * b
void vec_axpy(Vec& a, const Rational& c, const Vec& b);
std::string vec_to_string(const Vec& v);

}  // namespace bihom
