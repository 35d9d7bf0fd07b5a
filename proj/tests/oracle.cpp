#include "oracle.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

namespace oracle {
namespace {

using bihom::Matrix;
using bihom::Tensor3;

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

std::size_t flat_index(const std::vector<std::size_t>& t, std::size_t d) {
  std::size_t idx = 0;
  for (std::size_t x : t) idx = idx * d + x;
  return idx;
}

// All tuples of length n over {0, .., d-1} in odometer order.
void for_each_full_tuple(std::size_t d, std::size_t n,
                         const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> t(n, 0);
  while (true) {
    fn(t);
    std::size_t pos = n;
    while (pos > 0 && ++t[pos - 1] == d) {
      t[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) return;
  }
}

// Multilinear evaluation of a full-tuple coordinate vector on arbitrary
// argument vectors, by expanding every argument over the basis.
Vec eval_full(const std::vector<Rational>& coords, std::size_t n, std::size_t dg,
              std::size_t dv, const std::vector<Vec>& args) {
  Vec out(dv);
  for_each_full_tuple(dg, n, [&](const std::vector<std::size_t>& j) {
    Rational coeff(1);
    for (std::size_t i = 0; i < n; ++i) {
      if (args[i][j[i]] == 0) return;
      coeff *= args[i][j[i]];
    }
    const std::size_t base = flat_index(j, dg) * dv;
    for (std::size_t r = 0; r < dv; ++r) out[r] += coeff * coords[base + r];
  });
  return out;
}

bool all_zero(const std::vector<Rational>& v) {
  for (const Rational& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

std::size_t rank(DenseRows rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
    std::size_t pr = lead;
    while (pr < rows.size() && rows[pr][c] == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[lead], rows[pr]);
    for (std::size_t r = lead + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational f(rows[r][c] / rows[lead][c]);
      for (std::size_t cc = c; cc < cols; ++cc) rows[r][cc] -= f * rows[lead][cc];
    }
    ++lead;
  }
  return lead;
}

DenseRows kernel(DenseRows rows, std::size_t unknowns) {
  std::vector<std::size_t> pivot_col;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < unknowns && lead < rows.size(); ++c) {
    std::size_t pr = lead;
    while (pr < rows.size() && rows[pr][c] == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[lead], rows[pr]);
    for (std::size_t r = lead + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational f(rows[r][c] / rows[lead][c]);
      for (std::size_t cc = c; cc < unknowns; ++cc) rows[r][cc] -= f * rows[lead][cc];
    }
    pivot_col.push_back(c);
    ++lead;
  }
  std::vector<bool> is_pivot(unknowns, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;

  DenseRows basis;
  for (std::size_t fc = 0; fc < unknowns; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rational> x(unknowns);
    x[fc] = 1;
    // Echelon row k constrains exactly pivot variable pivot_col[k]; solve
    // bottom-up so every later variable is already fixed.
    for (std::size_t k = pivot_col.size(); k-- > 0;) {
      const std::size_t pc = pivot_col[k];
      Rational s(0);
      for (std::size_t c = pc + 1; c < unknowns; ++c) {
        if (x[c] != 0) s += rows[k][c] * x[c];
      }
      if (s != 0) x[pc] = Rational(-s / rows[k][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("oracle inverse requires a square matrix");
  const std::size_t n = m.rows();
  DenseRows aug(n, std::vector<Rational>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = m(r, c);
    aug[r][n + r] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = c;
    while (pr < n && aug[pr][c] == 0) ++pr;
    if (pr == n) throw std::domain_error("oracle inverse of a singular matrix");
    std::swap(aug[c], aug[pr]);
    const Rational p(aug[c][c]);
    for (std::size_t cc = 0; cc < 2 * n; ++cc) aug[c][cc] /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      const Rational f(aug[r][c]);
      for (std::size_t cc = 0; cc < 2 * n; ++cc) aug[r][cc] -= f * aug[c][cc];
    }
  }
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug[r][n + c];
  return out;
}

DenseRows cochain_space(const BiHomAlgebra& a, const Representation& v, std::size_t n) {
  const std::size_t dg = a.dim();
  const std::size_t dv = v.dim_v();
  if (n == 0) {
    DenseRows rows;
    for (std::size_t r = 0; r < dv; ++r) {
      std::vector<Rational> ra(dv), rb(dv);
      for (std::size_t c = 0; c < dv; ++c) {
        ra[c] = v.alpha_v()(r, c);
        rb[c] = v.beta_v()(r, c);
      }
      ra[r] -= 1;
      rb[r] -= 1;
      rows.push_back(std::move(ra));
      rows.push_back(std::move(rb));
    }
    return kernel(std::move(rows), dv);
  }

  const std::size_t unknowns = ipow(dg, n) * dv;
  DenseRows rows;

  // Antisymmetry in adjacent arguments; adjacent transpositions generate all
  // of them, and a repeated adjacent entry yields 2x = 0.
  for_each_full_tuple(dg, n, [&](const std::vector<std::size_t>& t) {
    for (std::size_t s = 0; s + 1 < n; ++s) {
      if (t[s] > t[s + 1]) continue;  // the swapped tuple contributes this row
      std::vector<std::size_t> u = t;
      std::swap(u[s], u[s + 1]);
      const std::size_t ti = flat_index(t, dg) * dv;
      const std::size_t ui = flat_index(u, dg) * dv;
      for (std::size_t r = 0; r < dv; ++r) {
        std::vector<Rational> row(unknowns);
        row[ti + r] += 1;
        row[ui + r] += 1;
        rows.push_back(std::move(row));
      }
    }
  });

  // Intertwining with each structure map phi:
  //   phiV(f(t)) = f(phi t_1, .., phi t_n), expanded over basis tuples j.
  const auto intertwine = [&](const Matrix& phi, const Matrix& phi_v) {
    for_each_full_tuple(dg, n, [&](const std::vector<std::size_t>& t) {
      const std::size_t ti = flat_index(t, dg) * dv;
      for (std::size_t r = 0; r < dv; ++r) {
        std::vector<Rational> row(unknowns);
        for (std::size_t c = 0; c < dv; ++c) row[ti + c] += phi_v(r, c);
        for_each_full_tuple(dg, n, [&](const std::vector<std::size_t>& j) {
          Rational coeff(1);
          for (std::size_t i = 0; i < n; ++i) {
            if (phi(j[i], t[i]) == 0) return;
            coeff *= phi(j[i], t[i]);
          }
          row[flat_index(j, dg) * dv + r] -= coeff;
        });
        rows.push_back(std::move(row));
      }
    });
  };
  intertwine(a.alpha(), v.alpha_v());
  intertwine(a.beta(), v.beta_v());

  return kernel(std::move(rows), unknowns);
}

std::vector<Rational> coboundary(const BiHomAlgebra& a, const Representation& v,
                                 std::size_t n, const std::vector<Rational>& coords,
                                 std::size_t which_bracket, std::size_t which_action) {
  const std::size_t dg = a.dim();
  const std::size_t dv = v.dim_v();
  const Tensor3& br = a.bracket(which_bracket);
  const Tensor3& act = v.action(which_action);
  std::vector<Rational> out(ipow(dg, n + 1) * dv);

  if (n == 0) {
    const Matrix m = a.alpha() * inverse(a.beta());
    for (std::size_t p = 0; p < dg; ++p) {
      const Vec val = act.contract(m.col(p), coords);
      for (std::size_t r = 0; r < dv; ++r) out[p * dv + r] = val[r];
    }
    return out;
  }

  const Matrix lead = a.alpha() * a.beta().pow(n - 1);
  const Matrix k = inverse(a.alpha()) * a.beta();

  for_each_full_tuple(dg, n + 1, [&](const std::vector<std::size_t>& t) {
    Vec acc(dv);
    // Action terms: (-1)^i  lead(p_i) . f(.., p_i omitted, ..), i 1-based.
    for (std::size_t c = 0; c <= n; ++c) {
      std::vector<std::size_t> sub;
      sub.reserve(n);
      for (std::size_t s = 0; s <= n; ++s)
        if (s != c) sub.push_back(t[s]);
      const std::size_t base = flat_index(sub, dg) * dv;
      Vec fv(coords.begin() + static_cast<std::ptrdiff_t>(base),
             coords.begin() + static_cast<std::ptrdiff_t>(base + dv));
      const Vec term = act.contract(lead.col(t[c]), fv);
      const Rational sign = (c % 2 == 0) ? Rational(-1) : Rational(1);
      bihom::vec_axpy(acc, sign, term);
    }
    // Bracket terms: (-1)^{i+j+1} f([k(p_i), p_j], beta p_1, .., omit i and j).
    for (std::size_t c = 0; c <= n; ++c) {
      for (std::size_t d = c + 1; d <= n; ++d) {
        std::vector<Vec> args;
        args.reserve(n);
        args.push_back(br.contract(k.col(t[c]), bihom::basis_vec(dg, t[d])));
        for (std::size_t s = 0; s <= n; ++s)
          if (s != c && s != d) args.push_back(a.beta().col(t[s]));
        const Vec val = eval_full(coords, n, dg, dv, args);
        const Rational sign = ((c + d + 1) % 2 == 0) ? Rational(1) : Rational(-1);
        bihom::vec_axpy(acc, sign, val);
      }
    }
    const std::size_t base = flat_index(t, dg) * dv;
    for (std::size_t r = 0; r < dv; ++r) out[base + r] = acc[r];
  });
  return out;
}

namespace {

// Images of a basis under a differential, with an explicit check that the
// composite of two consecutive differentials kills every basis element.
struct RankPair {
  std::size_t space_dim = 0;
  std::size_t image_rank = 0;
};

}  // namespace

std::size_t cohomology_dim(const BiHomAlgebra& a, const Representation& v, std::size_t n,
                           std::size_t which_bracket, std::size_t which_action) {
  const DenseRows space = cochain_space(a, v, n);
  DenseRows images;
  for (const auto& b : space)
    images.push_back(coboundary(a, v, n, b, which_bracket, which_action));
  const std::size_t kernel_dim = space.size() - rank(std::move(images));

  // Subtracting the boundary rank is only valid when the boundaries actually
  // lie in the kernel, so that containment is verified element by element.
  std::size_t boundaries = 0;
  if (n > 0) {
    DenseRows below;
    for (const auto& b : cochain_space(a, v, n - 1)) {
      std::vector<Rational> db = coboundary(a, v, n - 1, b, which_bracket, which_action);
      if (!all_zero(coboundary(a, v, n, db, which_bracket, which_action)))
        throw std::logic_error("oracle coboundary fails d.d = 0");
      below.push_back(std::move(db));
    }
    boundaries = rank(std::move(below));
  }
  if (boundaries > kernel_dim)
    throw std::logic_error("oracle found boundaries outside the kernel");
  return kernel_dim - boundaries;
}

DenseRows compatible_cochain_space(const CompatiblePair& p, const Representation& v,
                                   std::size_t n) {
  const BiHomAlgebra& a = p.algebra();
  const std::size_t dg = a.dim();
  const std::size_t dv = v.dim_v();
  if (n == 0) {
    DenseRows rows;
    for (std::size_t r = 0; r < dv; ++r) {
      std::vector<Rational> ra(dv), rb(dv);
      for (std::size_t c = 0; c < dv; ++c) {
        ra[c] = v.alpha_v()(r, c);
        rb[c] = v.beta_v()(r, c);
      }
      ra[r] -= 1;
      rb[r] -= 1;
      rows.push_back(std::move(ra));
      rows.push_back(std::move(rb));
    }
    const Matrix m = a.alpha() * inverse(a.beta());
    for (std::size_t i = 0; i < dg; ++i) {
      const Vec w = m.col(i);
      for (std::size_t r = 0; r < dv; ++r) {
        std::vector<Rational> row(dv);
        for (std::size_t c = 0; c < dv; ++c) {
          Rational coeff(0);
          for (std::size_t x = 0; x < dg; ++x)
            coeff += w[x] * (v.action(0)(x, c, r) - v.action(1)(x, c, r));
          row[c] = coeff;
        }
        rows.push_back(std::move(row));
      }
    }
    return kernel(std::move(rows), dv);
  }

  const DenseRows single = cochain_space(a, v, n);
  const std::size_t len = ipow(dg, n) * dv;
  DenseRows basis;
  for (std::size_t slot = 0; slot < n; ++slot) {
    for (const auto& b : single) {
      std::vector<Rational> x(n * len);
      for (std::size_t i = 0; i < len; ++i) x[slot * len + i] = b[i];
      basis.push_back(std::move(x));
    }
  }
  return basis;
}

std::vector<Rational> compatible_coboundary(const CompatiblePair& p, const Representation& v,
                                            std::size_t n,
                                            const std::vector<Rational>& coords) {
  const BiHomAlgebra& a = p.algebra();
  const std::size_t dg = a.dim();
  const std::size_t dv = v.dim_v();
  if (n == 0) return coboundary(a, v, 0, coords, 0, 0);

  const std::size_t len_in = ipow(dg, n) * dv;
  const std::size_t len_out = ipow(dg, n + 1) * dv;
  std::vector<Rational> out((n + 1) * len_out);
  for (std::size_t slot = 0; slot < n; ++slot) {
    const std::vector<Rational> f(coords.begin() + static_cast<std::ptrdiff_t>(slot * len_in),
                                  coords.begin() +
                                      static_cast<std::ptrdiff_t>((slot + 1) * len_in));
    const std::vector<Rational> d1 = coboundary(a, v, n, f, 0, 0);
    const std::vector<Rational> d2 = coboundary(a, v, n, f, 1, 1);
    // Component f_slot feeds output slots slot (via the first differential)
    // and slot+1 (via the second).
    for (std::size_t i = 0; i < len_out; ++i) {
      out[slot * len_out + i] += d1[i];
      out[(slot + 1) * len_out + i] += d2[i];
    }
  }
  return out;
}

std::size_t compatible_cohomology_dim(const CompatiblePair& p, const Representation& v,
                                      std::size_t n) {
  const DenseRows space = compatible_cochain_space(p, v, n);
  DenseRows images;
  for (const auto& b : space) images.push_back(compatible_coboundary(p, v, n, b));
  const std::size_t kernel_dim = space.size() - rank(std::move(images));

  std::size_t boundaries = 0;
  if (n > 0) {
    DenseRows below;
    for (const auto& b : compatible_cochain_space(p, v, n - 1)) {
      std::vector<Rational> db = compatible_coboundary(p, v, n - 1, b);
      if (!all_zero(compatible_coboundary(p, v, n, db)))
        throw std::logic_error("oracle band differential fails d.d = 0");
      below.push_back(std::move(db));
    }
    boundaries = rank(std::move(below));
  }
  if (boundaries > kernel_dim)
    throw std::logic_error("oracle found band boundaries outside the kernel");
  return kernel_dim - boundaries;
}

}  // namespace oracle
