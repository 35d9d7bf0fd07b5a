#pragma once

#include "bihom/algebra.hpp"

namespace bihom {

// Twisted skew-symmetry, twisted Jacobi identity and commutation of the
// structure maps, for one bracket, evaluated exhaustively on basis elements.
AxiomReport check_bihom_lie(const BiHomAlgebra& a, std::size_t which = 0);

// alpha and beta are morphisms of the selected bracket.
AxiomReport check_multiplicative(const BiHomAlgebra& a, std::size_t which = 0);

// f intertwines the structure maps and all paired brackets.  f maps A to B
// and must be dim(B) x dim(A); the two algebras must carry the same number of
// brackets.
bool check_morphism(const Matrix& f, const BiHomAlgebra& a, const BiHomAlgebra& b);

// Module axioms of one action against one bracket.
AxiomReport check_representation(const BiHomAlgebra& a, const Representation& v,
                                 std::size_t which_bracket = 0, std::size_t which_action = 0);

}  // namespace bihom
