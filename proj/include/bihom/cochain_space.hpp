#pragma once

#include <vector>

#include "bihom/algebra.hpp"
#include "bihom/cochain.hpp"

namespace bihom {

// Basis of the space of skew n-cochains intertwining the structure maps:
//   alphaV f = f alpha^(x n)   and   betaV f = f beta^(x n),
// degree 0 being { v : alphaV v = v, betaV v = v }.
struct BiHomCochainSpace {
  std::size_t degree = 0;
  std::vector<Cochain> basis;

  std::size_t dim() const { return basis.size(); }
};

// Computes the basis by solving the intertwining constraints exactly over the
// coordinates on strictly increasing tuples.  Deterministic: unknowns are
// ordered by (tuple rank, output coordinate) and the kernel basis comes from
// the RREF free columns in order.
BiHomCochainSpace cochain_space_basis(const BiHomAlgebra& a, const Representation& v,
                                      std::size_t degree);

}  // namespace bihom
