#include "bihom/axioms.hpp"

#include <stdexcept>

namespace bihom {

AxiomReport check_bihom_lie(const BiHomAlgebra& a, std::size_t which) {
  const Tensor3& br = a.bracket(which);
  const std::size_t n = a.dim();
  AxiomReport rep;

  rep.commute_ok = (a.alpha() * a.beta() == a.beta() * a.alpha());
  if (!rep.commute_ok) {
    rep.violations.push_back({"twist-commutation", {}, {}, {}});
  }

  // Skew-symmetry: [beta(e_i), alpha(e_j)] = -[beta(e_j), alpha(e_i)].
  // By bilinearity the basis pairs (including the diagonal) are exhaustive.
  for (std::size_t i = 0; i < n; ++i) {
    const Vec bi = a.beta().col(i);
    const Vec ai = a.alpha().col(i);
    for (std::size_t j = i; j < n; ++j) {
      const Vec bj = a.beta().col(j);
      const Vec aj = a.alpha().col(j);
      const Vec lhs = br.contract(bi, aj);
      const Vec rhs = vec_scale(-1, br.contract(bj, ai));
      if (lhs != rhs) {
        rep.skew_ok = false;
        rep.violations.push_back({"skew-symmetry", {i, j}, lhs, rhs});
      }
    }
  }

  // Jacobi: [beta^2(e_i), [beta(e_j), alpha(e_k)]] + cyclic = 0, all triples.
  const Matrix beta2 = a.beta() * a.beta();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vec sum(n);
        const std::size_t idx[3] = {i, j, k};
        for (int c = 0; c < 3; ++c) {
          const std::size_t p = idx[c];
          const std::size_t q = idx[(c + 1) % 3];
          const std::size_t r = idx[(c + 2) % 3];
          const Vec inner = br.contract(a.beta().col(q), a.alpha().col(r));
          const Vec outer = br.contract(beta2.col(p), inner);
          sum = vec_add(sum, outer);
        }
        if (!is_zero_vec(sum)) {
          rep.jacobi_ok = false;
          rep.violations.push_back({"bihom-jacobi", {i, j, k}, sum, Vec(n)});
        }
      }
    }
  }

  return rep;
}

AxiomReport check_multiplicative(const BiHomAlgebra& a, std::size_t which) {
  const Tensor3& br = a.bracket(which);
  const std::size_t n = a.dim();
  AxiomReport rep;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec base = br.on_basis(i, j);
      const Vec lhs_a = a.alpha().apply(base);
      const Vec rhs_a = br.contract(a.alpha().col(i), a.alpha().col(j));
      if (lhs_a != rhs_a) {
        rep.multiplicative_ok = false;
        rep.violations.push_back({"alpha-morphism", {i, j}, lhs_a, rhs_a});
      }
      const Vec lhs_b = a.beta().apply(base);
      const Vec rhs_b = br.contract(a.beta().col(i), a.beta().col(j));
      if (lhs_b != rhs_b) {
        rep.multiplicative_ok = false;
        rep.violations.push_back({"beta-morphism", {i, j}, lhs_b, rhs_b});
      }
    }
  }

  return rep;
}

bool check_morphism(const Matrix& f, const BiHomAlgebra& a, const BiHomAlgebra& b) {
  if (f.rows() != b.dim() || f.cols() != a.dim()) {
    throw std::invalid_argument("morphism check: map must be dim(target) x dim(source)");
  }
  if (a.bracket_count() != b.bracket_count()) {
    throw std::invalid_argument("morphism check: algebras carry different bracket counts");
  }

  if (!(b.alpha() * f == f * a.alpha())) return false;
  if (!(b.beta() * f == f * a.beta())) return false;

  for (std::size_t w = 0; w < a.bracket_count(); ++w) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) {
        const Vec lhs = f.apply(a.bracket(w).on_basis(i, j));
        const Vec rhs = b.bracket(w).contract(f.col(i), f.col(j));
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

AxiomReport check_representation(const BiHomAlgebra& a, const Representation& v,
                                 std::size_t which_bracket, std::size_t which_action) {
  if (v.dim_g() != a.dim()) {
    throw std::invalid_argument("representation check: action tensor is for a different dim g");
  }
  const Tensor3& br = a.bracket(which_bracket);
  const Tensor3& act = v.action(which_action);
  const std::size_t n = a.dim();
  const std::size_t m = v.dim_v();
  AxiomReport rep;

  // Conditions 1 and 2: the structure maps intertwine the action.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t w = 0; w < m; ++w) {
      const Vec base = act.on_basis(i, w);
      const Vec lhs_a = act.contract(a.alpha().col(i), v.alpha_v().col(w));
      const Vec rhs_a = v.alpha_v().apply(base);
      if (lhs_a != rhs_a) {
        rep.representation_ok = false;
        rep.violations.push_back({"action-alpha", {i, w}, lhs_a, rhs_a});
      }
      const Vec lhs_b = act.contract(a.beta().col(i), v.beta_v().col(w));
      const Vec rhs_b = v.beta_v().apply(base);
      if (lhs_b != rhs_b) {
        rep.representation_ok = false;
        rep.violations.push_back({"action-beta", {i, w}, lhs_b, rhs_b});
      }
    }
  }

  // Condition 3:
  //   [beta(p), q] . betaV(v) = alphabeta(p) . (q . v) - beta(q) . (alpha(p) . v).
  const Matrix ab = a.alpha() * a.beta();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec br_bi_j = br.contract(a.beta().col(i), basis_vec(n, j));
      for (std::size_t w = 0; w < m; ++w) {
        const Vec lhs = act.contract(br_bi_j, v.beta_v().col(w));
        const Vec t1 = act.contract(ab.col(i), act.on_basis(j, w));
        const Vec t2 = act.contract(a.beta().col(j), act.contract(a.alpha().col(i), basis_vec(m, w)));
        const Vec rhs = vec_sub(t1, t2);
        if (lhs != rhs) {
          rep.representation_ok = false;
          rep.violations.push_back({"action-bracket", {i, j, w}, lhs, rhs});
        }
      }
    }
  }

  return rep;
}

}  // namespace bihom
