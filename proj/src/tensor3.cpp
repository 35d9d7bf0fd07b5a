#include "bihom/tensor3.hpp"

#include <stdexcept>

namespace bihom {

Tensor3 Tensor3::operator+(const Tensor3& other) const {
  if (d0_ != other.d0_ || d1_ != other.d1_ || d2_ != other.d2_) {
    throw std::invalid_argument("tensor sum: extents disagree");
  }
  Tensor3 out(d0_, d1_, d2_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
  return out;
}

Tensor3 Tensor3::operator-(const Tensor3& other) const {
  if (d0_ != other.d0_ || d1_ != other.d1_ || d2_ != other.d2_) {
    throw std::invalid_argument("tensor difference: extents disagree");
  }
  Tensor3 out(d0_, d1_, d2_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
  return out;
}

Tensor3 Tensor3::scaled(const Rational& c) const {
  Tensor3 out(d0_, d1_, d2_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = c * data_[i];
  return out;
}

bool Tensor3::is_zero() const {
  for (const Rational& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

Vec Tensor3::contract(const Vec& u, const Vec& v) const {
  if (u.size() != d0_ || v.size() != d1_) {
    throw std::invalid_argument("tensor contract: argument lengths disagree");
  }
  Vec out(d2_);
  for (std::size_t i = 0; i < d0_; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < d1_; ++j) {
      if (v[j] == 0) continue;
      const Rational uv = u[i] * v[j];
      for (std::size_t k = 0; k < d2_; ++k) {
        const Rational& t = (*this)(i, j, k);
        if (t != 0) out[k] += uv * t;
      }
    }
  }
  return out;
}

Vec Tensor3::on_basis(std::size_t i, std::size_t j) const {
  Vec out(d2_);
  for (std::size_t k = 0; k < d2_; ++k) out[k] = (*this)(i, j, k);
  return out;
}

}  // namespace bihom
