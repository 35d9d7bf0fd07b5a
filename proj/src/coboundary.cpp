#include "bihom/coboundary.hpp"

#include <stdexcept>

#include "bihom/combinatorics.hpp"
#include "bihom/constructions.hpp"
#include "bihom/linalg.hpp"
#include "bihom/nr.hpp"

namespace bihom {

namespace {

Matrix required_inverse(const Matrix& m, const char* name) {
  std::optional<Matrix> inv = inverse(m);
  if (!inv) {
    throw std::domain_error(std::string("coboundary requires an invertible ") + name);
  }
  return *inv;
}

}  // namespace

Cochain ce_coboundary(const BiHomAlgebra& a, const Representation& v, const Cochain& f,
                      std::size_t which_bracket, std::size_t which_action) {
  const std::size_t dg = a.dim();
  const std::size_t dv = v.dim_v();
  if (v.dim_g() != dg) {
    throw std::invalid_argument("coboundary: module and algebra dimensions disagree");
  }
  if (f.dim_g() != dg || f.dim_v() != dv) {
    throw std::invalid_argument("coboundary: operand shape does not match the algebra/module");
  }
  const Matrix alpha_inv = required_inverse(a.alpha(), "alpha");
  const Matrix beta_inv = required_inverse(a.beta(), "beta");
  if (!f.intertwines(a.alpha(), a.beta(), v.alpha_v(), v.beta_v())) {
    throw std::domain_error("coboundary operand must intertwine the structure maps");
  }

  const Tensor3& br = a.bracket(which_bracket);
  const Tensor3& act = v.action(which_action);
  const std::size_t n = f.degree();
  Cochain out(n + 1, dg, dv);

  if (n == 0) {
    const Matrix m = a.alpha() * beta_inv;  // alpha beta^{-1}
    const Vec& val = f.value_vec({});
    for (std::size_t i = 0; i < dg; ++i) {
      out.set_value({i}, act.contract(m.col(i), val));
    }
  } else {
    const Matrix lead = a.alpha() * a.beta().pow(n - 1);  // alpha beta^{n-1}
    const Matrix k = alpha_inv * a.beta();                // alpha^{-1} beta
    detail::for_each_increasing(dg, n + 1, [&](const std::vector<std::size_t>& t) {
      Vec acc(dv, Rational(0));

      // First sum: (-1)^i  alpha beta^{n-1}(p_i) . f(.. p_i-hat ..), i 1-based.
      std::vector<std::size_t> sub(n);
      for (std::size_t c = 0; c <= n; ++c) {
        for (std::size_t s = 0, w = 0; s <= n; ++s) {
          if (s != c) sub[w++] = t[s];
        }
        const Vec term = act.contract(lead.col(t[c]), f.value_vec(sub));
        vec_axpy(acc, (c % 2 == 0) ? Rational(-1) : Rational(1), term);
      }

      // Second sum: (-1)^{i+j+1} f([alpha^{-1}beta(p_i), p_j], beta of the
      // remaining arguments in order), i < j 1-based.
      for (std::size_t c = 0; c <= n; ++c) {
        for (std::size_t d = c + 1; d <= n; ++d) {
          std::vector<Vec> args;
          args.reserve(n);
          args.push_back(br.contract(k.col(t[c]), basis_vec(dg, t[d])));
          for (std::size_t s = 0; s <= n; ++s) {
            if (s != c && s != d) args.push_back(a.beta().col(t[s]));
          }
          // (c+1)+(d+1)+1 and c+d+1 have the same parity.
          vec_axpy(acc, ((c + d + 1) % 2 == 0) ? Rational(1) : Rational(-1), f.eval(args));
        }
      }

      out.set_increasing(t, acc);
    });
  }

  if (!out.intertwines(a.alpha(), a.beta(), v.alpha_v(), v.beta_v())) {
    throw std::domain_error(
        "coboundary output failed the intertwining constraints; the structure maps are not "
        "morphisms or the module axioms do not hold");
  }
  return out;
}

bool coboundary_vs_nr(const BiHomAlgebra& a, const Cochain& f, std::size_t which) {
  const Cochain mu = bracket_cochain(a, which);
  const Cochain lhs = ce_coboundary(a, adjoint_representation(a), f, which, which);
  const Cochain rhs = nr_bracket_rev(f, mu, a);
  const std::size_t n = f.degree();
  return lhs == ((n % 2 == 1) ? rhs : rhs.scaled(Rational(-1)));
}

}  // namespace bihom
