#include "bihom/ccohomology.hpp"

#include <stdexcept>

#include "bihom/coboundary.hpp"
#include "bihom/cochain_space.hpp"
#include "bihom/linalg.hpp"

namespace bihom {

bool CompatibleCochain::is_zero() const {
  if (degree == 0) return is_zero_vec(scalar);
  for (const Cochain& c : components) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Vec CompatibleCochain::coords() const {
  if (degree == 0) return scalar;
  Vec out;
  for (const Cochain& c : components) {
    const Vec part = c.increasing_coords();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace {

// The degree-0 membership constraints; throws naming the first one violated.
void require_degree0_member(const CompatiblePair& p, const Representation& v, const Vec& val) {
  if (v.alpha_v().apply(val) != val || v.beta_v().apply(val) != val) {
    throw std::domain_error("a degree-0 compatible cochain must be fixed by the structure maps");
  }
  const std::optional<Matrix> beta_inv = inverse(p.algebra().beta());
  if (!beta_inv) {
    throw std::domain_error("the degree-0 compatible complex requires an invertible beta");
  }
  const Matrix m = p.algebra().alpha() * (*beta_inv);
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (v.action(0).contract(m.col(i), val) != v.action(1).contract(m.col(i), val)) {
      throw std::domain_error(
          "a degree-0 compatible cochain must see the two actions agree through alpha beta^{-1}");
    }
  }
}

}  // namespace

std::vector<CompatibleCochain> compatible_cochain_basis(const CompatiblePair& p,
                                                        const Representation& v, std::size_t n) {
  std::vector<CompatibleCochain> basis;
  if (n == 0) {
    const std::optional<Matrix> beta_inv = inverse(p.algebra().beta());
    if (!beta_inv) {
      throw std::domain_error("the degree-0 compatible complex requires an invertible beta");
    }
    const std::size_t dv = v.dim_v();
    const std::size_t dg = p.dim();
    // Fixed-vector rows for both structure maps, then one block of
    // action-difference rows per algebra basis element.
    Matrix rows(2 * dv + dg * dv, dv);
    for (std::size_t r = 0; r < dv; ++r) {
      for (std::size_t c = 0; c < dv; ++c) {
        rows(r, c) = v.alpha_v()(r, c) - ((r == c) ? Rational(1) : Rational(0));
        rows(dv + r, c) = v.beta_v()(r, c) - ((r == c) ? Rational(1) : Rational(0));
      }
    }
    const Matrix m = p.algebra().alpha() * (*beta_inv);
    for (std::size_t i = 0; i < dg; ++i) {
      const Vec x = m.col(i);
      for (std::size_t r = 0; r < dv; ++r) {
        for (std::size_t c = 0; c < dv; ++c) {
          const Vec diff = vec_sub(v.action(0).contract(x, basis_vec(dv, c)),
                                   v.action(1).contract(x, basis_vec(dv, c)));
          rows(2 * dv + i * dv + r, c) = diff[r];
        }
      }
    }
    for (const Vec& kernel_vec : nullspace_basis(rows)) {
      CompatibleCochain f;
      f.degree = 0;
      f.scalar = kernel_vec;
      basis.push_back(std::move(f));
    }
    return basis;
  }

  const BiHomCochainSpace single = cochain_space_basis(p.algebra(), v, n);
  const Cochain zero(n, p.dim(), v.dim_v());
  for (std::size_t slot = 0; slot < n; ++slot) {
    for (const Cochain& b : single.basis) {
      CompatibleCochain f;
      f.degree = n;
      f.components.assign(n, zero);
      f.components[slot] = b;
      basis.push_back(std::move(f));
    }
  }
  return basis;
}

CompatibleCochain compatible_coboundary(const CompatiblePair& p, const Representation& v,
                                        const CompatibleCochain& f) {
  const BiHomAlgebra& a = p.algebra();
  CompatibleCochain out;
  out.degree = f.degree + 1;

  if (f.degree == 0) {
    require_degree0_member(p, v, f.scalar);
    out.components.push_back(
        ce_coboundary(a, v, Cochain::constant(a.dim(), f.scalar), 0, 0));
    return out;
  }

  if (f.components.size() != f.degree) {
    throw std::invalid_argument("a degree-n compatible cochain carries n components");
  }
  const std::size_t n = f.degree;
  for (std::size_t slot = 0; slot <= n; ++slot) {
    Cochain g(n + 1, a.dim(), v.dim_v());
    if (slot < n) g = ce_coboundary(a, v, f.components[slot], 0, 0);
    if (slot > 0) g = g + ce_coboundary(a, v, f.components[slot - 1], 1, 1);
    out.components.push_back(std::move(g));
  }
  return out;
}

bool anticommute_check(const CompatiblePair& p, const Representation& v, std::size_t n) {
  const BiHomAlgebra& a = p.algebra();
  for (const Cochain& f : cochain_space_basis(a, v, n).basis) {
    const Cochain mixed = ce_coboundary(a, v, ce_coboundary(a, v, f, 1, 1), 0, 0) +
                          ce_coboundary(a, v, ce_coboundary(a, v, f, 0, 0), 1, 1);
    if (!mixed.is_zero()) return false;
  }
  return true;
}

namespace {

std::size_t compatible_rank(const CompatiblePair& p, const Representation& v, std::size_t n) {
  const std::vector<CompatibleCochain> basis = compatible_cochain_basis(p, v, n);
  if (basis.empty()) return 0;

  std::vector<Vec> images;
  images.reserve(basis.size());
  for (const CompatibleCochain& b : basis) {
    const CompatibleCochain db = compatible_coboundary(p, v, b);
    if (!compatible_coboundary(p, v, db).is_zero()) {
      throw std::domain_error(
          "the interleaved coboundary applied twice is nonzero; the complex is ill-formed");
    }
    images.push_back(db.coords());
  }
  if (images[0].empty()) return 0;
  Matrix d(images[0].size(), images.size());
  for (std::size_t c = 0; c < images.size(); ++c) {
    for (std::size_t r = 0; r < images[c].size(); ++r) d(r, c) = images[c][r];
  }
  return rank(d);
}

}  // namespace

std::size_t compatible_cohomology_dim(const CompatiblePair& p, const Representation& v,
                                      std::size_t n) {
  if (!p.algebra().regular()) {
    throw std::domain_error("the compatible complex requires invertible structure maps");
  }
  const std::size_t dim_n = compatible_cochain_basis(p, v, n).size();
  const std::size_t rank_n = compatible_rank(p, v, n);
  const std::size_t kernel = dim_n - rank_n;
  if (n == 0) return kernel;

  const std::size_t rank_below = compatible_rank(p, v, n - 1);
  if (rank_below > kernel) {
    throw std::logic_error(
        "compatible cohomology: image larger than kernel despite square-zero check");
  }
  return kernel - rank_below;
}

Cochain sum_morphism_phi(const CompatibleCochain& f, const Representation& v) {
  if (f.degree == 0) {
    return Cochain::constant(v.dim_g(), vec_scale(Rational(1, 2), f.scalar));
  }
  Cochain total = f.components[0];
  for (std::size_t slot = 1; slot < f.degree; ++slot) total = total + f.components[slot];
  return total;
}

bool chain_map_check(const CompatiblePair& p, const Representation& v, std::size_t n) {
  const std::pair<BiHomAlgebra, Representation> summed =
      lambda_sum_representation(p, v, Rational(1), Rational(1));
  for (const CompatibleCochain& f : compatible_cochain_basis(p, v, n)) {
    const Cochain lhs = sum_morphism_phi(compatible_coboundary(p, v, f), v);
    const Cochain rhs =
        ce_coboundary(summed.first, summed.second, sum_morphism_phi(f, v), 0, 0);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace bihom
