#pragma once

#include "bihom/algebra.hpp"
#include "bihom/cochain.hpp"

namespace bihom {

// Chevalley-Eilenberg coboundary of a twist-intertwining skew cochain, for
// one (bracket, action) pairing.  Degree 0:
//   (delta v)(p) = alpha beta^{-1}(p) . v,
// and for f of degree n >= 1, on basis tuples (p_1..p_{n+1}):
//   (delta f) = sum_i (-1)^i  alpha beta^{n-1}(p_i) . f(.. p_i-hat ..)
//             + sum_{i<j} (-1)^{i+j+1}
//                 f([alpha^{-1}beta(p_i), p_j], beta(p_1) .. hatted i,j .. ),
// extended to all tuples by skew symmetry.  Requires invertible structure
// maps and an operand satisfying the intertwining constraints; the output is
// verified to satisfy them as well (it does whenever the structure maps are
// bracket morphisms and the module axioms hold) and a violation throws.
Cochain ce_coboundary(const BiHomAlgebra& a, const Representation& v, const Cochain& f,
                      std::size_t which_bracket = 0, std::size_t which_action = 0);

// Agreement between the coboundary with self-coefficients and the graded
// bracket with the structure tensor:
//   delta f == (-1)^(n-1) [f, mu]'
// where [.,.]' is nr_bracket_rev and n = deg f.  (With identity structure
// maps this is equivalent to delta f == (-1)^n [mu, f]; the primed variant is
// the form that survives nontrivial twists.)
bool coboundary_vs_nr(const BiHomAlgebra& a, const Cochain& f, std::size_t which = 0);

}  // namespace bihom
