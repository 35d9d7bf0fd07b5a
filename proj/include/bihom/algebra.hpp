#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bihom/matrix.hpp"
#include "bihom/tensor3.hpp"

namespace bihom {

// A finite-dimensional algebra with one or more bilinear brackets and a
// commuting pair of structure maps (alpha, beta).  Nothing about the bracket
// axioms is assumed at construction time: validity is a question for the
// check_* functions, so ill-formed candidate structures are representable.
//
// Shape constraints and alpha.beta == beta.alpha ARE enforced here; a
// structure violating those is not meaningful input for any operation.
class BiHomAlgebra {
 public:
  BiHomAlgebra(std::size_t dim, std::vector<Tensor3> brackets, Matrix alpha, Matrix beta);

  std::size_t dim() const { return dim_; }
  std::size_t bracket_count() const { return brackets_.size(); }
  const Tensor3& bracket(std::size_t which = 0) const;
  const std::vector<Tensor3>& brackets() const { return brackets_; }
  const Matrix& alpha() const { return alpha_; }
  const Matrix& beta() const { return beta_; }

  // True when both structure maps are invertible.
  bool regular() const { return regular_; }

  // [u, v] for the selected bracket.
  Vec bracket_eval(std::size_t which, const Vec& u, const Vec& v) const;

 private:
  std::size_t dim_;
  std::vector<Tensor3> brackets_;
  Matrix alpha_;
  Matrix beta_;
  bool regular_;
};

// Associative analogue: one multiplication tensor plus the two structure maps.
class AssociativeAlgebra {
 public:
  AssociativeAlgebra(std::size_t dim, Tensor3 mult, Matrix alpha, Matrix beta);

  std::size_t dim() const { return dim_; }
  const Tensor3& mult() const { return mult_; }
  const Matrix& alpha() const { return alpha_; }
  const Matrix& beta() const { return beta_; }

  Vec mult_eval(const Vec& u, const Vec& v) const { return mult_.contract(u, v); }

 private:
  std::size_t dim_;
  Tensor3 mult_;
  Matrix alpha_;
  Matrix beta_;
};

// A module over a BiHomAlgebra: action tensors (one per bracket of the
// algebra it is paired with, or a single one) plus structure maps of V.
class Representation {
 public:
  Representation(std::size_t dim_g, std::size_t dim_v, std::vector<Tensor3> actions,
                 Matrix alpha_v, Matrix beta_v);

  std::size_t dim_g() const { return dim_g_; }
  std::size_t dim_v() const { return dim_v_; }
  std::size_t action_count() const { return actions_.size(); }
  const Tensor3& action(std::size_t which = 0) const;
  const Matrix& alpha_v() const { return alpha_v_; }
  const Matrix& beta_v() const { return beta_v_; }
  bool regular_v() const { return regular_v_; }

  // u . w for u in g, w in V.
  Vec act(std::size_t which, const Vec& u, const Vec& w) const;

 private:
  std::size_t dim_g_;
  std::size_t dim_v_;
  std::vector<Tensor3> actions_;
  Matrix alpha_v_;
  Matrix beta_v_;
  bool regular_v_;
};

// One concrete counterexample to a named axiom, evaluated on basis elements.
struct Violation {
  std::string axiom;
  std::vector<std::size_t> indices;  // basis indices the axiom was evaluated on
  Vec lhs;
  Vec rhs;
};

// Result of an axiom battery.  Every flag defaults to true; a check sets the
// flags it is responsible for and records one Violation per failing instance,
// so flags-all-true is equivalent to violations-empty.
struct AxiomReport {
  bool commute_ok = true;         // alpha.beta == beta.alpha
  bool skew_ok = true;            // twisted skew-symmetry
  bool jacobi_ok = true;          // twisted Jacobi identity
  bool multiplicative_ok = true;  // alpha, beta are bracket morphisms
  bool representation_ok = true;  // module axioms
  bool compatible_ok = true;      // mixed six-term identity / mixed module axiom
  std::vector<Violation> violations;

  bool all_ok() const {
    return commute_ok && skew_ok && jacobi_ok && multiplicative_ok && representation_ok &&
           compatible_ok;
  }
};

}  // namespace bihom
