#include "bihom/nr.hpp"

#include <stdexcept>

#include "bihom/combinatorics.hpp"

namespace bihom {

namespace {

void require_nr_operand(const Cochain& c, const BiHomAlgebra& a, const char* name) {
  if (c.dim_g() != a.dim() || c.dim_v() != a.dim()) {
    throw std::invalid_argument(std::string(name) + ": cochain is not g-valued over this algebra");
  }
  if (c.degree() == 0) {
    throw std::domain_error(std::string(name) +
                            ": degree-0 cochains are outside the graded bracket's domain");
  }
  if (!c.intertwines(a.alpha(), a.beta(), a.alpha(), a.beta())) {
    throw std::domain_error(std::string(name) + ": cochain does not intertwine alpha and beta");
  }
}

}  // namespace

Cochain bracket_cochain(const BiHomAlgebra& a, std::size_t which) {
  return Cochain::from_tensor(a.bracket(which));
}

Cochain nr_diamond(const Cochain& p, const Cochain& q, const BiHomAlgebra& a) {
  require_nr_operand(p, a, "graded product");
  require_nr_operand(q, a, "graded product");
  const std::size_t dim = a.dim();
  const std::size_t m = p.degree() - 1;
  const std::size_t n = q.degree() - 1;
  const std::size_t deg = m + n + 1;

  const Matrix tw = a.alpha() * a.beta().pow(n);

  Cochain out(deg, dim, dim);
  detail::for_each_increasing(dim, deg, [&](const std::vector<std::size_t>& t) {
    Vec acc(dim);
    detail::for_each_shuffle(n + 1, m, [&](const std::vector<std::size_t>& qpos,
                                           const std::vector<std::size_t>& ppos, int sign) {
      std::vector<std::size_t> qidx(n + 1);
      for (std::size_t i = 0; i <= n; ++i) qidx[i] = t[qpos[i]];
      std::vector<Vec> pargs;
      pargs.reserve(m + 1);
      pargs.push_back(q.value_vec(qidx));
      for (std::size_t i = 0; i < m; ++i) pargs.push_back(tw.col(t[ppos[i]]));
      vec_axpy(acc, Rational(sign), p.eval(pargs));
    });
    out.set_increasing(t, acc);
  });
  return out;
}

Cochain nr_bracket(const Cochain& p, const Cochain& q, const BiHomAlgebra& a) {
  const std::size_t m = p.degree() - 1;
  const std::size_t n = q.degree() - 1;
  const Cochain pq = nr_diamond(p, q, a);
  const Cochain qp = nr_diamond(q, p, a);
  return ((m * n) % 2 == 0) ? pq - qp : pq + qp;
}

Cochain nr_diamond_rev(const Cochain& p, const Cochain& q, const BiHomAlgebra& a) {
  require_nr_operand(p, a, "graded product");
  require_nr_operand(q, a, "graded product");
  const std::size_t dim = a.dim();
  const std::size_t m = p.degree() - 1;
  const std::size_t n = q.degree() - 1;
  const std::size_t deg = m + n + 1;

  const Matrix tw = a.alpha() * a.beta().pow(n);

  Cochain out(deg, dim, dim);
  detail::for_each_increasing(dim, deg, [&](const std::vector<std::size_t>& t) {
    Vec acc(dim);
    detail::for_each_shuffle(m, n + 1, [&](const std::vector<std::size_t>& ppos,
                                           const std::vector<std::size_t>& qpos, int sign) {
      std::vector<std::size_t> qidx(n + 1);
      for (std::size_t i = 0; i <= n; ++i) qidx[i] = t[qpos[i]];
      std::vector<Vec> pargs;
      pargs.reserve(m + 1);
      for (std::size_t i = 0; i < m; ++i) pargs.push_back(tw.col(t[ppos[i]]));
      pargs.push_back(q.value_vec(qidx));
      vec_axpy(acc, Rational(sign), p.eval(pargs));
    });
    out.set_increasing(t, acc);
  });
  return out;
}

Cochain nr_bracket_rev(const Cochain& p, const Cochain& q, const BiHomAlgebra& a) {
  const std::size_t m = p.degree() - 1;
  const std::size_t n = q.degree() - 1;
  const Cochain pq = nr_diamond_rev(p, q, a);
  const Cochain qp = nr_diamond_rev(q, p, a);
  return ((m * n) % 2 == 0) ? pq - qp : pq + qp;
}

bool mc_check(const BiHomAlgebra& a, std::size_t which) {
  const Cochain mu = bracket_cochain(a, which);
  if (!mu.intertwines(a.alpha(), a.beta(), a.alpha(), a.beta())) {
    throw std::domain_error("square-zero check: bracket does not intertwine alpha and beta");
  }
  return nr_bracket(mu, mu, a).is_zero();
}

}  // namespace bihom
