#pragma once

#include <cstddef>
#include <vector>

#include "bihom/compatible.hpp"

namespace bihom {

// A cochain of the compatible complex: degree 0 is a single vector of V
// (subject to the fixed-vector and equal-action constraints), degree n >= 1
// is an ordered n-tuple of degree-n twist-intertwining cochains.
struct CompatibleCochain {
  std::size_t degree = 0;
  Vec scalar;                       // degree 0 payload
  std::vector<Cochain> components;  // degree >= 1 payload, size == degree

  bool is_zero() const;
  // Concatenated coordinates over strictly increasing tuples, component by
  // component (degree 0: the vector itself).
  Vec coords() const;
};

// Basis of the degree-n space: for n >= 1 the n-fold copy of the
// single-structure space (one basis cochain placed in each slot), for n = 0
// the solutions of
//   alphaV v = v,  betaV v = v,  alpha beta^{-1}(p) .1 v = alpha beta^{-1}(p) .2 v.
// Degree 0 requires invertible structure maps.
std::vector<CompatibleCochain> compatible_cochain_basis(const CompatiblePair& p,
                                                        const Representation& v, std::size_t n);

// The interleaved differential:
//   delta(v)        = the single 1-cochain p -> alpha beta^{-1}(p) .1 v,
//   delta(f_1..f_n) = (g_1, .., g_{n+1}),  g_i = delta1 f_i + delta2 f_{i-1}
// with the out-of-range components read as zero.  The degree-0 invariants are
// checked and a violation throws.
CompatibleCochain compatible_coboundary(const CompatiblePair& p, const Representation& v,
                                        const CompatibleCochain& f);

// delta1 delta2 + delta2 delta1 = 0 on every basis element of the degree-n
// single-structure space.
bool anticommute_check(const CompatiblePair& p, const Representation& v, std::size_t n);

// dim ker - dim im of the interleaved differential at degree n.  The
// square-zero identity is verified on every basis element used; a violation
// throws rather than returning a meaningless number.
std::size_t compatible_cohomology_dim(const CompatiblePair& p, const Representation& v,
                                      std::size_t n);

// The comparison map into the complex of the summed structures
// (mu1 + mu2, .1 + .2): half the vector at degree 0, the sum of the
// components at degree n >= 1.
Cochain sum_morphism_phi(const CompatibleCochain& f, const Representation& v);

// phi . delta_c = delta_+ . phi on every basis element at degree n, where
// delta_+ is the coboundary of the summed structures.
bool chain_map_check(const CompatiblePair& p, const Representation& v, std::size_t n);

}  // namespace bihom
