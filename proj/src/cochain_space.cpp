#include "bihom/cochain_space.hpp"

#include <stdexcept>

#include "bihom/combinatorics.hpp"
#include "bihom/linalg.hpp"

namespace bihom {

namespace {

// Adds, for one structure-map pair (m on g, mv on V), the rows expressing
//   mv f(e_T) - f(m e_{T_1}, ..., m e_{T_n}) = 0
// on every increasing tuple T, into `rows`.  Unknowns are the coordinates of
// f on increasing tuples.  The second term expands multilinearly; values on
// non-increasing tuples are rewritten through skew-symmetry.
void append_intertwining_rows(const Matrix& m, const Matrix& mv, std::size_t dg, std::size_t dv,
                              std::size_t n, std::vector<Vec>& rows) {
  const std::size_t unknowns = detail::binom(dg, n) * dv;
  detail::for_each_increasing(dg, n, [&](const std::vector<std::size_t>& t) {
    // Row block for tuple t: dv rows.
    std::vector<Vec> block(dv, Vec(unknowns));
    const std::size_t t_rank = detail::increasing_rank(t, dg);
    // mv f(e_T): coefficient mv(r, s) on unknown (t, s).
    for (std::size_t r = 0; r < dv; ++r) {
      for (std::size_t s = 0; s < dv; ++s) {
        if (mv(r, s) != 0) block[r][t_rank * dv + s] += mv(r, s);
      }
    }
    // -f(m e_T1, ..., m e_Tn) = -sum_J prod_i m(J_i, T_i) * f(e_J).
    detail::for_each_tuple(dg, n, [&](const std::vector<std::size_t>& j) {
      Rational coeff = 1;
      for (std::size_t i = 0; i < n; ++i) {
        const Rational& c = m(j[i], t[i]);
        if (c == 0) {
          coeff = 0;
          break;
        }
        coeff *= c;
      }
      if (coeff == 0) return;
      std::vector<std::size_t> sorted = j;
      const int sign = detail::sort_with_sign(sorted);
      if (sign == 0) return;
      const std::size_t j_rank = detail::increasing_rank(sorted, dg);
      const Rational signed_coeff = (sign > 0) ? coeff : Rational(-coeff);
      for (std::size_t r = 0; r < dv; ++r) {
        block[r][j_rank * dv + r] -= signed_coeff;
      }
    });
    for (std::size_t r = 0; r < dv; ++r) rows.push_back(std::move(block[r]));
  });
}

}  // namespace

BiHomCochainSpace cochain_space_basis(const BiHomAlgebra& a, const Representation& v,
                                      std::size_t degree) {
  if (v.dim_g() != a.dim()) {
    throw std::invalid_argument("cochain space: module is over a different dim g");
  }
  const std::size_t dg = a.dim();
  const std::size_t dv = v.dim_v();

  BiHomCochainSpace space;
  space.degree = degree;

  if (degree == 0) {
    // { w : alphaV w = w, betaV w = w }.
    Matrix sys(2 * dv, dv);
    const Matrix id = Matrix::identity(dv);
    const Matrix da = v.alpha_v() - id;
    const Matrix db = v.beta_v() - id;
    for (std::size_t i = 0; i < dv; ++i) {
      for (std::size_t j = 0; j < dv; ++j) {
        sys(i, j) = da(i, j);
        sys(dv + i, j) = db(i, j);
      }
    }
    for (const Vec& k : nullspace_basis(sys)) {
      space.basis.push_back(Cochain::constant(dg, k));
    }
    return space;
  }

  const std::size_t unknowns = detail::binom(dg, degree) * dv;
  if (unknowns == 0) return space;

  std::vector<Vec> rows;
  append_intertwining_rows(a.alpha(), v.alpha_v(), dg, dv, degree, rows);
  append_intertwining_rows(a.beta(), v.beta_v(), dg, dv, degree, rows);

  Matrix sys(rows.size(), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < unknowns; ++j) sys(i, j) = rows[i][j];
  }

  for (const Vec& k : nullspace_basis(sys)) {
    space.basis.push_back(Cochain::from_increasing_coords(degree, dg, dv, k));
  }
  return space;
}

}  // namespace bihom
