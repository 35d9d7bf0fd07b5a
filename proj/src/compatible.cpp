#include "bihom/compatible.hpp"

#include <random>
#include <stdexcept>
#include <utility>

#include "bihom/axioms.hpp"
#include "bihom/combinatorics.hpp"
#include "bihom/constructions.hpp"
#include "bihom/linalg.hpp"
#include "bihom/nr.hpp"

namespace bihom {

namespace {

void require_twist_commuting(const BiHomAlgebra& a, const Matrix& op, const char* what) {
  if (op.rows() != a.dim() || op.cols() != a.dim()) {
    throw std::invalid_argument(std::string(what) + " has the wrong shape");
  }
  if (!(op * a.alpha() == a.alpha() * op) || !(op * a.beta() == a.beta() * op)) {
    throw std::domain_error(std::string(what) + " must commute with the structure maps");
  }
}

void require_bihom_lie(const BiHomAlgebra& a, std::size_t which, const char* what) {
  if (!check_bihom_lie(a, which).all_ok()) {
    throw std::domain_error(std::string(what) + " requires a bracket passing the Lie checks");
  }
}

// Tag single-bracket violations with the slot they came from and merge.
void absorb_bracket_report(const AxiomReport& from, std::size_t slot, AxiomReport& into) {
  into.commute_ok = into.commute_ok && from.commute_ok;
  into.skew_ok = into.skew_ok && from.skew_ok;
  into.jacobi_ok = into.jacobi_ok && from.jacobi_ok;
  const std::string prefix = "bracket" + std::to_string(slot + 1) + ":";
  for (Violation v : from.violations) {
    v.axiom = prefix + v.axiom;
    into.violations.push_back(std::move(v));
  }
}

}  // namespace

CompatiblePair::CompatiblePair(BiHomAlgebra algebra) : algebra_(std::move(algebra)) {
  if (algebra_.bracket_count() != 2) {
    throw std::invalid_argument("a compatible pair carries exactly two brackets");
  }
}

AxiomReport check_compatible_pair(const CompatiblePair& p) {
  const BiHomAlgebra& a = p.algebra();
  AxiomReport report;
  absorb_bracket_report(check_bihom_lie(a, 0), 0, report);
  absorb_bracket_report(check_bihom_lie(a, 1), 1, report);

  const std::size_t d = a.dim();
  const Matrix beta2 = a.beta() * a.beta();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        Vec total(d, Rational(0));
        // Cyclic rotations of (i, j, k); inner bracket one slot, outer the other.
        const std::size_t cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
        for (const auto& t : cyc) {
          const Vec inner1 = p.first().contract(a.beta().col(t[1]), a.alpha().col(t[2]));
          vec_axpy(total, Rational(1), p.second().contract(beta2.col(t[0]), inner1));
          const Vec inner2 = p.second().contract(a.beta().col(t[1]), a.alpha().col(t[2]));
          vec_axpy(total, Rational(1), p.first().contract(beta2.col(t[0]), inner2));
        }
        if (!is_zero_vec(total)) {
          report.compatible_ok = false;
          report.violations.push_back(
              {"compatibility", {i, j, k}, total, Vec(d, Rational(0))});
        }
      }
    }
  }
  return report;
}

BiHomAlgebra lambda_sum_bracket(const CompatiblePair& p, const Rational& lambda,
                                const Rational& eta) {
  const Tensor3 sum = p.first().scaled(lambda) + p.second().scaled(eta);
  return BiHomAlgebra(p.dim(), {sum}, p.algebra().alpha(), p.algebra().beta());
}

Tensor3 nijenhuis_bracket(const BiHomAlgebra& a, const Matrix& n_op, std::size_t which) {
  require_twist_commuting(a, n_op, "a Nijenhuis operator");
  const std::size_t d = a.dim();
  const Tensor3& br = a.bracket(which);
  Tensor3 out = Tensor3::cube(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Vec val = br.contract(n_op.col(i), basis_vec(d, j));
      vec_axpy(val, Rational(-1), br.contract(n_op.col(j), basis_vec(d, i)));
      vec_axpy(val, Rational(-1), n_op.apply(br.on_basis(i, j)));
      for (std::size_t k = 0; k < d; ++k) out(i, j, k) = val[k];
    }
  }
  return out;
}

bool nijenhuis_check(const BiHomAlgebra& a, const Matrix& n_op, std::size_t which) {
  require_bihom_lie(a, which, "the Nijenhuis condition");
  const Tensor3 deformed = nijenhuis_bracket(a, n_op, which);
  const std::size_t d = a.dim();
  const Tensor3& br = a.bracket(which);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Vec lhs = br.contract(n_op.col(i), n_op.col(j));
      if (lhs != n_op.apply(deformed.on_basis(i, j))) return false;
    }
  }
  return true;
}

CompatiblePair nijenhuis_deform(const BiHomAlgebra& a, const Matrix& n_op, std::size_t which) {
  if (!nijenhuis_check(a, n_op, which)) {
    throw std::domain_error("the operator fails the Nijenhuis condition");
  }
  CompatiblePair pair(BiHomAlgebra(
      a.dim(), {a.bracket(which), nijenhuis_bracket(a, n_op, which)}, a.alpha(), a.beta()));
  if (!check_compatible_pair(pair).all_ok()) {
    throw std::domain_error("Nijenhuis deformation produced an incompatible pair");
  }
  return pair;
}

bool rb_check(const BiHomAlgebra& a, const Matrix& r, std::size_t s, std::size_t l,
              const Rational& lambda, std::size_t which) {
  require_twist_commuting(a, r, "a Rota-Baxter operator");
  const std::size_t d = a.dim();
  const Tensor3& br = a.bracket(which);
  const Matrix tr = a.alpha().pow(s) * a.beta().pow(l) * r;  // alpha^s beta^l R
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Vec lhs = br.contract(r.col(i), r.col(j));
      Vec inner = br.contract(tr.col(i), basis_vec(d, j));
      vec_axpy(inner, Rational(1), br.contract(basis_vec(d, i), tr.col(j)));
      vec_axpy(inner, lambda, br.on_basis(i, j));
      if (lhs != r.apply(inner)) return false;
    }
  }
  return true;
}

Tensor3 rb_induced_bracket(const BiHomAlgebra& a, const Matrix& r, std::size_t s, std::size_t l,
                           const Rational& lambda, std::size_t which) {
  require_twist_commuting(a, r, "a Rota-Baxter operator");
  const std::size_t d = a.dim();
  const Tensor3& br = a.bracket(which);
  const Matrix tr = a.alpha().pow(s) * a.beta().pow(l) * r;
  Tensor3 out = Tensor3::cube(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Vec val = br.contract(tr.col(i), basis_vec(d, j));
      vec_axpy(val, Rational(1), br.contract(basis_vec(d, i), tr.col(j)));
      vec_axpy(val, lambda, br.on_basis(i, j));
      for (std::size_t k = 0; k < d; ++k) out(i, j, k) = val[k];
    }
  }
  return out;
}

bool rb_compatible_check(const BiHomAlgebra& a, const Matrix& r, const Matrix& s_op,
                         std::size_t s, std::size_t l, const Rational& lambda,
                         std::size_t which) {
  if (!rb_check(a, r, s, l, lambda, which) || !rb_check(a, s_op, s, l, lambda, which)) {
    throw std::domain_error(
        "operator compatibility requires both operators to pass the Rota-Baxter check");
  }
  const std::size_t d = a.dim();
  const Tensor3& br = a.bracket(which);
  const Matrix twist = a.alpha().pow(s) * a.beta().pow(l);
  const Matrix tr = twist * r;
  const Matrix ts = twist * s_op;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Vec lhs = br.contract(r.col(i), s_op.col(j));
      vec_axpy(lhs, Rational(1), br.contract(s_op.col(i), r.col(j)));

      Vec r_arg = br.contract(ts.col(i), basis_vec(d, j));
      vec_axpy(r_arg, Rational(1), br.contract(basis_vec(d, i), ts.col(j)));
      Vec s_arg = br.contract(tr.col(i), basis_vec(d, j));
      vec_axpy(s_arg, Rational(1), br.contract(basis_vec(d, i), tr.col(j)));

      Vec rhs = r.apply(r_arg);
      vec_axpy(rhs, Rational(1), s_op.apply(s_arg));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

CompatiblePair rb_compatible_pair(const BiHomAlgebra& a, const Matrix& r, const Matrix& s_op,
                                  std::size_t s, std::size_t l, const Rational& lambda,
                                  std::size_t which) {
  if (!rb_compatible_check(a, r, s_op, s, l, lambda, which)) {
    throw std::domain_error("the operators fail the Rota-Baxter compatibility condition");
  }
  CompatiblePair pair(BiHomAlgebra(a.dim(),
                                   {rb_induced_bracket(a, r, s, l, lambda, which),
                                    rb_induced_bracket(a, s_op, s, l, lambda, which)},
                                   a.alpha(), a.beta()));
  if (!check_compatible_pair(pair).all_ok()) {
    throw std::domain_error("the induced Rota-Baxter brackets form an incompatible pair");
  }
  return pair;
}

Differential Differential::adjoint(Cochain eta) {
  if (eta.degree() != 2) {
    throw std::invalid_argument("an adjoint differential is built from a degree-2 element");
  }
  Differential d;
  d.eta_ = std::move(eta);
  return d;
}

Cochain Differential::apply(const Cochain& f, const BiHomAlgebra& a) const {
  if (!eta_) return Cochain(f.degree() + 1, f.dim_g(), f.dim_v());
  return nr_bracket(*eta_, f, a);
}

namespace {

void require_mc_operand(const Cochain& t, const BiHomAlgebra& a, const char* what) {
  if (t.degree() != 2 || t.dim_g() != a.dim() || t.dim_v() != a.dim()) {
    throw std::domain_error(std::string(what) + " must be a degree-2 self-valued cochain");
  }
  if (!t.intertwines(a.alpha(), a.beta(), a.alpha(), a.beta())) {
    throw std::domain_error(std::string(what) + " must intertwine the structure maps");
  }
}

}  // namespace

bool mc_pair_check(const MCPair& m, const Differential& d1, const Differential& d2,
                   const BiHomAlgebra& a) {
  require_mc_operand(m.theta1, a, "the first Maurer-Cartan component");
  require_mc_operand(m.theta2, a, "the second Maurer-Cartan component");
  const Rational half(1, 2);

  Cochain c1 = d1.apply(m.theta1, a) + nr_bracket(m.theta1, m.theta1, a).scaled(half);
  if (!c1.is_zero()) return false;
  Cochain c2 = d2.apply(m.theta2, a) + nr_bracket(m.theta2, m.theta2, a).scaled(half);
  if (!c2.is_zero()) return false;
  Cochain cross =
      d1.apply(m.theta2, a) + d2.apply(m.theta1, a) + nr_bracket(m.theta1, m.theta2, a);
  return cross.is_zero();
}

bool twisted_mc_check(const MCPair& base, const MCPair& increment, const BiHomAlgebra& a) {
  const Differential z = Differential::zero();
  if (!mc_pair_check(base, z, z, a)) {
    throw std::domain_error("the base pair must be Maurer-Cartan for the zero differentials");
  }
  const bool direct =
      mc_pair_check({base.theta1 + increment.theta1, base.theta2 + increment.theta2}, z, z, a);
  const bool twisted = mc_pair_check(increment, Differential::adjoint(base.theta1),
                                     Differential::adjoint(base.theta2), a);
  if (direct != twisted) {
    throw std::logic_error("the two Maurer-Cartan twisting routes disagree");
  }
  return direct;
}

AxiomReport check_compatible_representation(const CompatiblePair& p, const Representation& v) {
  if (v.action_count() != 2) {
    throw std::invalid_argument("a compatible module carries exactly two actions");
  }
  const BiHomAlgebra& a = p.algebra();
  AxiomReport report;
  for (std::size_t slot = 0; slot < 2; ++slot) {
    const AxiomReport single = check_representation(a, v, slot, slot);
    report.commute_ok = report.commute_ok && single.commute_ok;
    report.representation_ok = report.representation_ok && single.representation_ok;
    const std::string prefix = "action" + std::to_string(slot + 1) + ":";
    for (Violation viol : single.violations) {
      viol.axiom = prefix + viol.axiom;
      report.violations.push_back(std::move(viol));
    }
  }

  const std::size_t dg = a.dim();
  const std::size_t dv = v.dim_v();
  const Matrix ab = a.alpha() * a.beta();
  const Tensor3& act1 = v.action(0);
  const Tensor3& act2 = v.action(1);
  for (std::size_t i = 0; i < dg; ++i) {
    for (std::size_t j = 0; j < dg; ++j) {
      const Vec br1 = p.first().contract(a.beta().col(i), basis_vec(dg, j));
      const Vec br2 = p.second().contract(a.beta().col(i), basis_vec(dg, j));
      for (std::size_t x = 0; x < dv; ++x) {
        const Vec bv = v.beta_v().col(x);
        Vec lhs = act2.contract(br1, bv);
        vec_axpy(lhs, Rational(1), act1.contract(br2, bv));

        const Vec ux = basis_vec(dv, x);
        Vec rhs = act1.contract(ab.col(i), act2.contract(basis_vec(dg, j), ux));
        vec_axpy(rhs, Rational(-1),
                 act2.contract(a.beta().col(j), act1.contract(a.alpha().col(i), ux)));
        vec_axpy(rhs, Rational(1),
                 act2.contract(ab.col(i), act1.contract(basis_vec(dg, j), ux)));
        vec_axpy(rhs, Rational(-1),
                 act1.contract(a.beta().col(j), act2.contract(a.alpha().col(i), ux)));

        if (lhs != rhs) {
          report.compatible_ok = false;
          report.violations.push_back({"compatible-representation", {i, j, x}, lhs, rhs});
        }
      }
    }
  }
  return report;
}

std::pair<BiHomAlgebra, Representation> lambda_sum_representation(const CompatiblePair& p,
                                                                  const Representation& v,
                                                                  const Rational& lambda,
                                                                  const Rational& eta) {
  if (!check_compatible_representation(p, v).all_ok()) {
    throw std::domain_error("summing requires a passing compatible module");
  }
  BiHomAlgebra algebra = lambda_sum_bracket(p, lambda, eta);
  Representation module(v.dim_g(), v.dim_v(),
                        {v.action(0).scaled(lambda) + v.action(1).scaled(eta)}, v.alpha_v(),
                        v.beta_v());
  if (!check_representation(algebra, module).all_ok()) {
    throw std::domain_error("the summed structures failed the module axioms");
  }
  return {std::move(algebra), std::move(module)};
}

CompatiblePair compatible_semidirect(const CompatiblePair& p, const Representation& v) {
  if (!check_compatible_representation(p, v).all_ok()) {
    throw std::domain_error("the semidirect pair requires a passing compatible module");
  }
  CompatiblePair out(semidirect_product(p.algebra(), v));
  if (!check_compatible_pair(out).all_ok()) {
    throw std::domain_error("the semidirect construction produced an incompatible pair");
  }
  return out;
}

Cochain lift_cochain(const Cochain& f) {
  const std::size_t dg = f.dim_g();
  const std::size_t dv = f.dim_v();
  const std::size_t total = dg + dv;
  Cochain out(f.degree(), total, total);
  if (f.degree() == 0) {
    Vec embedded(total, Rational(0));
    const Vec val = f.value_vec({});
    for (std::size_t r = 0; r < dv; ++r) embedded[dg + r] = val[r];
    out.set_value({}, embedded);
    return out;
  }
  detail::for_each_increasing(dg, f.degree(), [&](const std::vector<std::size_t>& t) {
    const Vec val = f.value_vec(t);
    Vec embedded(total, Rational(0));
    for (std::size_t r = 0; r < dv; ++r) embedded[dg + r] = val[r];
    out.set_increasing(t, embedded);
  });
  return out;
}

McEquivalenceStats mc_equivalence_property(unsigned seed, std::size_t trials) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> dim_pick(2, 3);

  McEquivalenceStats stats;
  stats.trials = trials;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t d = static_cast<std::size_t>(dim_pick(rng));
    std::vector<Tensor3> brackets;
    for (int b = 0; b < 2; ++b) {
      Tensor3 t = Tensor3::cube(d);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
          for (std::size_t k = 0; k < d; ++k) {
            const Rational val(entry(rng));
            t(i, j, k) = val;
            t(j, i, k) = -val;
          }
        }
      }
      brackets.push_back(std::move(t));
    }
    BiHomAlgebra a(d, brackets, Matrix::identity(d), Matrix::identity(d));
    const bool compatible_verdict = check_compatible_pair(CompatiblePair(a)).all_ok();
    const Differential z = Differential::zero();
    const bool mc_verdict =
        mc_pair_check({bracket_cochain(a, 0), bracket_cochain(a, 1)}, z, z, a);
    if (compatible_verdict == mc_verdict) ++stats.agreements;
    if (compatible_verdict) ++stats.compatible_count;
  }
  return stats;
}

}  // namespace bihom
