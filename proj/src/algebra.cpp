#include "bihom/algebra.hpp"

#include <stdexcept>

#include "bihom/linalg.hpp"

namespace bihom {

namespace {

void require_square(const Matrix& m, std::size_t dim, const char* name) {
  if (m.rows() != dim || m.cols() != dim) {
    throw std::invalid_argument(std::string(name) + ": expected " + std::to_string(dim) + "x" +
                                std::to_string(dim) + " matrix");
  }
}

}  // namespace

BiHomAlgebra::BiHomAlgebra(std::size_t dim, std::vector<Tensor3> brackets, Matrix alpha,
                           Matrix beta)
    : dim_(dim), brackets_(std::move(brackets)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (brackets_.empty()) {
    throw std::invalid_argument("algebra: at least one bracket is required");
  }
  for (const Tensor3& t : brackets_) {
    if (t.d0() != dim_ || t.d1() != dim_ || t.d2() != dim_) {
      throw std::invalid_argument("algebra: bracket tensor extents must equal dim");
    }
  }
  require_square(alpha_, dim_, "alpha");
  require_square(beta_, dim_, "beta");
  if (!(alpha_ * beta_ == beta_ * alpha_)) {
    throw std::invalid_argument("algebra: alpha and beta must commute");
  }
  regular_ = is_invertible(alpha_) && is_invertible(beta_);
}

const Tensor3& BiHomAlgebra::bracket(std::size_t which) const {
  if (which >= brackets_.size()) {
    throw std::out_of_range("bracket index out of range");
  }
  return brackets_[which];
}

Vec BiHomAlgebra::bracket_eval(std::size_t which, const Vec& u, const Vec& v) const {
  return bracket(which).contract(u, v);
}

AssociativeAlgebra::AssociativeAlgebra(std::size_t dim, Tensor3 mult, Matrix alpha, Matrix beta)
    : dim_(dim), mult_(std::move(mult)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (mult_.d0() != dim_ || mult_.d1() != dim_ || mult_.d2() != dim_) {
    throw std::invalid_argument("associative algebra: tensor extents must equal dim");
  }
  require_square(alpha_, dim_, "alpha");
  require_square(beta_, dim_, "beta");
  if (!(alpha_ * beta_ == beta_ * alpha_)) {
    throw std::invalid_argument("associative algebra: alpha and beta must commute");
  }
}

Representation::Representation(std::size_t dim_g, std::size_t dim_v, std::vector<Tensor3> actions,
                               Matrix alpha_v, Matrix beta_v)
    : dim_g_(dim_g),
      dim_v_(dim_v),
      actions_(std::move(actions)),
      alpha_v_(std::move(alpha_v)),
      beta_v_(std::move(beta_v)) {
  if (actions_.empty()) {
    throw std::invalid_argument("representation: at least one action is required");
  }
  for (const Tensor3& t : actions_) {
    if (t.d0() != dim_g_ || t.d1() != dim_v_ || t.d2() != dim_v_) {
      throw std::invalid_argument("representation: action extents must be (dim g, dim V, dim V)");
    }
  }
  require_square(alpha_v_, dim_v_, "alphaV");
  require_square(beta_v_, dim_v_, "betaV");
  if (!(alpha_v_ * beta_v_ == beta_v_ * alpha_v_)) {
    throw std::invalid_argument("representation: alphaV and betaV must commute");
  }
  regular_v_ = is_invertible(alpha_v_) && is_invertible(beta_v_);
}

const Tensor3& Representation::action(std::size_t which) const {
  if (which >= actions_.size()) {
    throw std::out_of_range("action index out of range");
  }
  return actions_[which];
}

Vec Representation::act(std::size_t which, const Vec& u, const Vec& w) const {
  return action(which).contract(u, w);
}

}  // namespace bihom
