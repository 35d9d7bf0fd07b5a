#pragma once

#include "bihom/algebra.hpp"

namespace bihom {

// Twist of an ordinary Lie algebra (identity structure maps) by a commuting
// pair of bracket morphisms: {p,q} = [a(p), b(q)], returned with structure
// maps (a, b).  When the input carries several brackets, each is twisted.
// Preconditions (ordinary Lie, ab = ba, morphisms) are verified and a
// violation throws std::domain_error naming the failing identity.
BiHomAlgebra yau_twist(const BiHomAlgebra& l, const Matrix& a, const Matrix& b);

// Twisted-associativity predicate: alpha(p)·(q·r) = (p·q)·beta(r) on basis
// triples.  Optional; the commutator construction below does not require it.
bool check_bihom_associative(const AssociativeAlgebra& a);

// Commutator-type bracket [p,q] = p·q − (alpha⁻¹beta(q))·(alpha beta⁻¹(p))
// with the twists carried over.  Requires invertible twists.
BiHomAlgebra assoc_commutator_lie(const AssociativeAlgebra& a);

// Componentwise bracket(s) on the direct sum, block-diagonal twists.  The two
// inputs must carry the same number of brackets and pass check_bihom_lie.
BiHomAlgebra direct_sum(const BiHomAlgebra& a, const BiHomAlgebra& b);

// Semidirect product on g ⊕ V:
//   [(p,x),(q,y)] = ([p,q], p.y − (alpha⁻¹beta(q)) . (alphaV betaV⁻¹(x))).
// Brackets are paired with actions index by index, so a two-bracket algebra
// with a two-action module yields a two-bracket product.  Requires regular
// twists on both sides and passing module axioms for every pairing.
BiHomAlgebra semidirect_product(const BiHomAlgebra& a, const Representation& v);

// The algebra acting on itself by its own bracket(s), with its own twists.
Representation adjoint_representation(const BiHomAlgebra& a);

}  // namespace bihom
