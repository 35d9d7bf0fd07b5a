#pragma once

#include "bihom/algebra.hpp"
#include "bihom/cochain.hpp"

namespace bihom {

// The bracket tensor of A as a g-valued 2-cochain (raw values, which for
// twisted algebras are not plain-skew).
Cochain bracket_cochain(const BiHomAlgebra& a, std::size_t which = 0);

// Graded insertion product on g-valued cochains intertwining the structure
// maps.  For P of degree m+1 and Q of degree n+1,
//   (P <> Q)(p_1..p_{m+n+1}) =
//     sum over unshuffles sigma in Sh(n+1, m) of
//       sign(sigma) P(Q(p_sigma(1)..p_sigma(n+1)),
//                     alpha beta^n (p_sigma(n+2)), ...).
// Values are computed on strictly increasing tuples and stored by skew
// extension.  Both inputs must have degree >= 1 and intertwine alpha/beta.
Cochain nr_diamond(const Cochain& p, const Cochain& q, const BiHomAlgebra& a);

// [P,Q] = P<>Q - (-1)^{mn} Q<>P with m = deg P - 1, n = deg Q - 1.
Cochain nr_bracket(const Cochain& p, const Cochain& q, const BiHomAlgebra& a);

// Variant with the twisted arguments in front and the inner value in the last
// slot:
//   (P <>' Q)(p_1..p_{m+n+1}) =
//     sum over unshuffles sigma in Sh(m, n+1) of
//       sign(sigma) P(alpha beta^n (p_sigma(1)), ..., alpha beta^n (p_sigma(m)),
//                     Q(p_sigma(m+1)..p_sigma(m+n+1))).
// For plain-skew P the two variants agree up to the sign (-1)^{mn} (moving
// the inner value across the m outer slots); they differ in substance exactly
// on the non-plain-skew bracket tensors of twisted algebras, where this is
// the form that matches the coboundary operator (see coboundary_vs_nr).
Cochain nr_diamond_rev(const Cochain& p, const Cochain& q, const BiHomAlgebra& a);

Cochain nr_bracket_rev(const Cochain& p, const Cochain& q, const BiHomAlgebra& a);

// True iff the selected bracket squares to zero under the graded bracket.
// Requires the bracket tensor to intertwine alpha and beta.
bool mc_check(const BiHomAlgebra& a, std::size_t which = 0);

}  // namespace bihom
