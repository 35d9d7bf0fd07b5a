#include "bihom/cohomology.hpp"

#include <stdexcept>
#include <vector>

#include "bihom/coboundary.hpp"
#include "bihom/cochain_space.hpp"
#include "bihom/linalg.hpp"

namespace bihom {

namespace {

// Rank of the coboundary out of degree n, with the square-zero guard applied
// to every image.  Zero when the degree-n space is trivial.
std::size_t coboundary_rank(const BiHomAlgebra& a, const Representation& v, std::size_t n,
                            std::size_t wb, std::size_t wa) {
  const BiHomCochainSpace space = cochain_space_basis(a, v, n);
  if (space.dim() == 0) return 0;

  std::vector<Vec> images;
  images.reserve(space.dim());
  for (const Cochain& b : space.basis) {
    const Cochain db = ce_coboundary(a, v, b, wb, wa);
    if (!ce_coboundary(a, v, db, wb, wa).is_zero()) {
      throw std::domain_error("coboundary applied twice is nonzero; the complex is ill-formed");
    }
    images.push_back(db.increasing_coords());
  }
  if (images[0].empty()) return 0;

  Matrix d(images[0].size(), images.size());
  for (std::size_t c = 0; c < images.size(); ++c) {
    for (std::size_t r = 0; r < images[c].size(); ++r) d(r, c) = images[c][r];
  }
  return rank(d);
}

}  // namespace

std::size_t cohomology_dim(const BiHomAlgebra& a, const Representation& v, std::size_t n,
                           std::size_t which_bracket, std::size_t which_action) {
  if (!a.regular()) {
    throw std::domain_error("cohomology requires invertible structure maps on the algebra");
  }
  if (!v.regular_v()) {
    throw std::domain_error("cohomology requires invertible structure maps on the module");
  }

  const std::size_t dim_n = cochain_space_basis(a, v, n).dim();
  const std::size_t rank_n = coboundary_rank(a, v, n, which_bracket, which_action);
  const std::size_t kernel = dim_n - rank_n;
  if (n == 0) return kernel;

  const std::size_t rank_below = coboundary_rank(a, v, n - 1, which_bracket, which_action);
  if (rank_below > kernel) {
    throw std::logic_error("cohomology: image larger than kernel despite square-zero check");
  }
  return kernel - rank_below;
}

}  // namespace bihom
