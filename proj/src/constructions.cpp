#include "bihom/constructions.hpp"

#include <stdexcept>

#include "bihom/axioms.hpp"
#include "bihom/linalg.hpp"

namespace bihom {

BiHomAlgebra yau_twist(const BiHomAlgebra& l, const Matrix& a, const Matrix& b) {
  const std::size_t n = l.dim();
  if (!l.alpha().is_identity() || !l.beta().is_identity()) {
    throw std::domain_error("yau twist: input must carry identity structure maps");
  }
  for (std::size_t w = 0; w < l.bracket_count(); ++w) {
    if (!check_bihom_lie(l, w).all_ok()) {
      throw std::domain_error("yau twist: input bracket fails the Lie axioms");
    }
  }
  if (a.rows() != n || a.cols() != n || b.rows() != n || b.cols() != n) {
    throw std::invalid_argument("yau twist: twist maps must be dim x dim");
  }
  if (!(a * b == b * a)) {
    throw std::domain_error("yau twist: twist maps do not commute");
  }
  for (std::size_t w = 0; w < l.bracket_count(); ++w) {
    const Tensor3& br = l.bracket(w);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (a.apply(br.on_basis(i, j)) != br.contract(a.col(i), a.col(j))) {
          throw std::domain_error("yau twist: first map is not a bracket morphism");
        }
        if (b.apply(br.on_basis(i, j)) != br.contract(b.col(i), b.col(j))) {
          throw std::domain_error("yau twist: second map is not a bracket morphism");
        }
      }
    }
  }

  std::vector<Tensor3> twisted;
  for (std::size_t w = 0; w < l.bracket_count(); ++w) {
    const Tensor3& br = l.bracket(w);
    Tensor3 t = Tensor3::cube(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Vec val = br.contract(a.col(i), b.col(j));
        for (std::size_t k = 0; k < n; ++k) t(i, j, k) = val[k];
      }
    }
    twisted.push_back(std::move(t));
  }
  return BiHomAlgebra(n, std::move(twisted), a, b);
}

bool check_bihom_associative(const AssociativeAlgebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Vec lhs = a.mult().contract(a.alpha().col(i), a.mult().on_basis(j, k));
        const Vec rhs = a.mult().contract(a.mult().on_basis(i, j), a.beta().col(k));
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

BiHomAlgebra assoc_commutator_lie(const AssociativeAlgebra& a) {
  const std::size_t n = a.dim();
  const auto alpha_inv = inverse(a.alpha());
  const auto beta_inv = inverse(a.beta());
  if (!alpha_inv || !beta_inv) {
    throw std::domain_error("commutator bracket: structure maps must be invertible");
  }
  const Matrix ainv_b = *alpha_inv * a.beta();
  const Matrix a_binv = a.alpha() * *beta_inv;

  Tensor3 t = Tensor3::cube(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec val =
          vec_sub(a.mult().on_basis(i, j), a.mult().contract(ainv_b.col(j), a_binv.col(i)));
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) = val[k];
    }
  }
  return BiHomAlgebra(n, {std::move(t)}, a.alpha(), a.beta());
}

BiHomAlgebra direct_sum(const BiHomAlgebra& a, const BiHomAlgebra& b) {
  if (a.bracket_count() != b.bracket_count()) {
    throw std::invalid_argument("direct sum: bracket counts disagree");
  }
  for (std::size_t w = 0; w < a.bracket_count(); ++w) {
    if (!check_bihom_lie(a, w).all_ok() || !check_bihom_lie(b, w).all_ok()) {
      throw std::domain_error("direct sum: an input fails the Lie axioms");
    }
  }
  const std::size_t na = a.dim();
  const std::size_t n = na + b.dim();

  std::vector<Tensor3> brackets;
  for (std::size_t w = 0; w < a.bracket_count(); ++w) {
    Tensor3 t = Tensor3::cube(n);
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < na; ++j)
        for (std::size_t k = 0; k < na; ++k) t(i, j, k) = a.bracket(w)(i, j, k);
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j)
        for (std::size_t k = 0; k < b.dim(); ++k) t(na + i, na + j, na + k) = b.bracket(w)(i, j, k);
    brackets.push_back(std::move(t));
  }
  return BiHomAlgebra(n, std::move(brackets), Matrix::block_diag(a.alpha(), b.alpha()),
                      Matrix::block_diag(a.beta(), b.beta()));
}

BiHomAlgebra semidirect_product(const BiHomAlgebra& a, const Representation& v) {
  if (v.dim_g() != a.dim()) {
    throw std::invalid_argument("semidirect product: module is over a different dim g");
  }
  if (a.bracket_count() != v.action_count()) {
    throw std::invalid_argument("semidirect product: bracket and action counts disagree");
  }
  if (!a.regular() || !v.regular_v()) {
    throw std::domain_error("semidirect product: requires invertible structure maps");
  }
  for (std::size_t w = 0; w < a.bracket_count(); ++w) {
    if (!check_representation(a, v, w, w).all_ok()) {
      throw std::domain_error("semidirect product: module axioms fail");
    }
  }

  const std::size_t ng = a.dim();
  const std::size_t nv = v.dim_v();
  const std::size_t n = ng + nv;
  const Matrix ainv_b = *inverse(a.alpha()) * a.beta();
  const Matrix av_bvinv = v.alpha_v() * *inverse(v.beta_v());

  std::vector<Tensor3> brackets;
  for (std::size_t w = 0; w < a.bracket_count(); ++w) {
    Tensor3 t = Tensor3::cube(n);
    // g x g block: the bracket of A.
    for (std::size_t i = 0; i < ng; ++i)
      for (std::size_t j = 0; j < ng; ++j)
        for (std::size_t k = 0; k < ng; ++k) t(i, j, k) = a.bracket(w)(i, j, k);
    // g x V block: p . y.
    for (std::size_t i = 0; i < ng; ++i) {
      for (std::size_t y = 0; y < nv; ++y) {
        const Vec val = v.action(w).on_basis(i, y);
        for (std::size_t k = 0; k < nv; ++k) t(i, ng + y, ng + k) = val[k];
      }
    }
    // V x g block: -(alpha^-1 beta(q)) . (alphaV betaV^-1(x)).
    for (std::size_t x = 0; x < nv; ++x) {
      for (std::size_t j = 0; j < ng; ++j) {
        const Vec val = v.action(w).contract(ainv_b.col(j), av_bvinv.col(x));
        for (std::size_t k = 0; k < nv; ++k) t(ng + x, j, ng + k) = -val[k];
      }
    }
    brackets.push_back(std::move(t));
  }
  return BiHomAlgebra(n, std::move(brackets), Matrix::block_diag(a.alpha(), v.alpha_v()),
                      Matrix::block_diag(a.beta(), v.beta_v()));
}

Representation adjoint_representation(const BiHomAlgebra& a) {
  return Representation(a.dim(), a.dim(), a.brackets(), a.alpha(), a.beta());
}

}  // namespace bihom
