#pragma once

#include <cstddef>
#include <vector>

#include "bihom/matrix.hpp"

namespace bihom {

// Structure-constant tensor.  For a bracket, t(i,j,k) is the e_k coefficient
// of [e_i, e_j]; for an action of g on V, t(i,a,r) is the v_r coefficient of
// e_i . v_a.  Extents are (d0, d1, d2) = (inputs 1, inputs 2, outputs).
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
      : d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2) {}

  static Tensor3 cube(std::size_t d) { return Tensor3(d, d, d); }

  std::size_t d0() const { return d0_; }
  std::size_t d1() const { return d1_; }
  std::size_t d2() const { return d2_; }

  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * d1_ + j) * d2_ + k];
  }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * d1_ + j) * d2_ + k];
  }

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.d0_ == b.d0_ && a.d1_ == b.d1_ && a.d2_ == b.d2_ && a.data_ == b.data_;
  }

  Tensor3 operator+(const Tensor3& other) const;
  Tensor3 operator-(const Tensor3& other) const;
  Tensor3 scaled(const Rational& c) const;

  bool is_zero() const;

  // Bilinear evaluation: out_k = sum_{i,j} u_i v_j t(i,j,k).
  Vec contract(const Vec& u, const Vec& v) const;

  // Value on a pair of basis vectors, as a vector of output coordinates.
  Vec on_basis(std::size_t i, std::size_t j) const;

 private:
  std::size_t d0_ = 0;
  std::size_t d1_ = 0;
  std::size_t d2_ = 0;
  std::vector<Rational> data_;
};

}  // namespace bihom
