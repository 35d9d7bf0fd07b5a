#pragma once

#include <cstddef>

#include "bihom/algebra.hpp"

namespace bihom {

// dim ker(delta: C^n -> C^{n+1}) - dim im(delta: C^{n-1} -> C^n) over the
// rationals, for one (bracket, action) pairing, with the image term absent at
// n = 0.  Ranks are taken over the coordinates on strictly increasing tuples.
// Requires invertible structure maps on both sides; delta.delta = 0 is
// verified on every basis element used and a violation throws (it would mean
// the inputs are not a multiplicative algebra with a genuine module).
std::size_t cohomology_dim(const BiHomAlgebra& a, const Representation& v, std::size_t n,
                           std::size_t which_bracket = 0, std::size_t which_action = 0);

}  // namespace bihom
