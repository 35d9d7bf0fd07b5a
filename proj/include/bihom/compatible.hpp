#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "bihom/algebra.hpp"
#include "bihom/cochain.hpp"

namespace bihom {

// A candidate compatible structure: one algebra carrying exactly two
// brackets over a shared (alpha, beta).  Whether the pair actually satisfies
// the compatibility identity is a question for check_compatible_pair.
class CompatiblePair {
 public:
  explicit CompatiblePair(BiHomAlgebra algebra);

  const BiHomAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return algebra_.dim(); }
  const Tensor3& first() const { return algebra_.bracket(0); }
  const Tensor3& second() const { return algebra_.bracket(1); }

 private:
  BiHomAlgebra algebra_;
};

// Each bracket individually (skew + Jacobi), then the mixed six-term identity
//   [b^2(p), [b(q), a(r)]_1]_2 + cyclic + [b^2(p), [b(q), a(r)]_2]_1 + cyclic = 0
// on all basis triples.  Mixed failures carry the axiom tag "compatibility";
// single-bracket failures keep their own tags prefixed with the bracket slot.
AxiomReport check_compatible_pair(const CompatiblePair& p);

// The single-bracket algebra (g, lambda.mu1 + eta.mu2, alpha, beta).  Every
// linear combination of a compatible pair is itself a BiHom-Lie bracket; that
// equivalence is a tested property, not an assumption here.
BiHomAlgebra lambda_sum_bracket(const CompatiblePair& p, const Rational& lambda,
                                const Rational& eta);

// Nijenhuis condition for an operator commuting with the structure maps:
//   [N(p), N(q)] = N([N(p), q] - [N(q), p] - N([p, q]))
// on all basis pairs.  The deformed bracket is
//   [p, q]_N = [N(p), q] - [N(q), p] - N([p, q]).
bool nijenhuis_check(const BiHomAlgebra& a, const Matrix& n_op, std::size_t which = 0);
Tensor3 nijenhuis_bracket(const BiHomAlgebra& a, const Matrix& n_op, std::size_t which = 0);

// ([.,.], [.,.]_N) as a CompatiblePair; the Nijenhuis condition and the
// compatibility of the result are both enforced.
CompatiblePair nijenhuis_deform(const BiHomAlgebra& a, const Matrix& n_op, std::size_t which = 0);

// Rota-Baxter-type operator of weight lambda, twisted by alpha^s beta^l:
//   [R(p), R(q)] = R([T R(p), q] + [p, T R(q)] + lambda [p, q]),  T = alpha^s beta^l.
// R must commute with alpha and beta (checked, violation throws).
bool rb_check(const BiHomAlgebra& a, const Matrix& r, std::size_t s, std::size_t l,
              const Rational& lambda, std::size_t which = 0);

// [p, q]_R = [T R(p), q] + [p, T R(q)] + lambda [p, q].
Tensor3 rb_induced_bracket(const BiHomAlgebra& a, const Matrix& r, std::size_t s, std::size_t l,
                           const Rational& lambda, std::size_t which = 0);

// Two such operators of the same weight and twist powers are compatible when
//   [R(p),S(q)] + [S(p),R(q)] =
//     R([T S(p), q] + [p, T S(q)]) + S([T R(p), q] + [p, T R(q)]).
bool rb_compatible_check(const BiHomAlgebra& a, const Matrix& r, const Matrix& s_op,
                         std::size_t s, std::size_t l, const Rational& lambda,
                         std::size_t which = 0);

// ([.,.]_R, [.,.]_S); both operator checks, their compatibility and the
// compatibility of the induced pair are enforced.
CompatiblePair rb_compatible_pair(const BiHomAlgebra& a, const Matrix& r, const Matrix& s_op,
                                  std::size_t s, std::size_t l, const Rational& lambda,
                                  std::size_t which = 0);

// A pair of degree-2 self-valued cochains, candidate Maurer-Cartan pair.
struct MCPair {
  Cochain theta1;
  Cochain theta2;
};

// The two differentials the theory instantiates: zero, and the graded
// adjoint [eta, -] of a fixed degree-2 element.
class Differential {
 public:
  static Differential zero() { return Differential(); }
  static Differential adjoint(Cochain eta);

  // d(f); the zero differential yields the zero cochain one degree up.
  Cochain apply(const Cochain& f, const BiHomAlgebra& a) const;

 private:
  Differential() = default;
  std::optional<Cochain> eta_;
};

// Maurer-Cartan pair conditions:
//   d1(t1) + 1/2 [t1, t1] = 0,   d2(t2) + 1/2 [t2, t2] = 0,
//   d1(t2) + d2(t1) + [t1, t2] = 0.
// With zero differentials this says exactly that the three graded brackets
// [t1,t1], [t2,t2], [t1,t2] vanish.
bool mc_pair_check(const MCPair& m, const Differential& d1, const Differential& d2,
                   const BiHomAlgebra& a);

// (t1+v1, t2+v2) is Maurer-Cartan for the zero differentials iff (v1, v2) is
// Maurer-Cartan for the twisted differentials ([t1,-], [t2,-]).  Both sides
// are computed independently; a disagreement would falsify the twisting
// identity and throws.  Returns the common verdict.  The base pair must be
// Maurer-Cartan for the zero differentials.
bool twisted_mc_check(const MCPair& base, const MCPair& increment, const BiHomAlgebra& a);

// Module checks for a two-action module over a two-bracket algebra: each
// (bracket_i, action_i) pairing individually, then the mixed condition
//   [b(p),q]_1 .2 bV(v) + [b(p),q]_2 .1 bV(v)
//     = ab(p) .1 (q .2 v) - b(q) .2 (a(p) .1 v)
//     + ab(p) .2 (q .1 v) - b(q) .1 (a(p) .2 v)
// on all basis triples (tag "compatible-representation").
AxiomReport check_compatible_representation(const CompatiblePair& p, const Representation& v);

// The summed structures: (g, lambda.mu1 + eta.mu2) acting on V by
// lambda .1 + eta .2.  Requires a passing compatible module; the result is
// verified to be a module again.
std::pair<BiHomAlgebra, Representation> lambda_sum_representation(const CompatiblePair& p,
                                                                  const Representation& v,
                                                                  const Rational& lambda,
                                                                  const Rational& eta);

// Both semidirect brackets on g + V, paired index by index:
//   [(p,x),(q,y)]_i = ([p,q]_i, p .i y - (alpha^{-1}beta(q)) .i (alphaV betaV^{-1}(x))).
// Requires regular structure maps on both sides and a passing compatible
// module; the result is verified compatible.
CompatiblePair compatible_semidirect(const CompatiblePair& p, const Representation& v);

// f in C^n(g, V) lifted to C^n(g+V, g+V):
//   lift(f)((p1,v1), .., (pn,vn)) = (0, f(p1, .., pn)).
// On basis tuples this is supported on pure-g tuples with values in the V
// block; degree 0 embeds the vector.  lift(f) = 0 iff f = 0.
Cochain lift_cochain(const Cochain& f);

// Randomized agreement count between the compatibility verdict and the
// Maurer-Cartan pair verdict on `trials` random plain-skew bracket pairs in
// dimensions 2-3 with identity structure maps.  Returns the number of trials
// on which the two verdicts agreed (the two verdicts characterize the same
// condition, so agreement is expected on every trial).
struct McEquivalenceStats {
  std::size_t trials = 0;
  std::size_t agreements = 0;
  std::size_t compatible_count = 0;  // how many sampled pairs were compatible
};
McEquivalenceStats mc_equivalence_property(unsigned seed, std::size_t trials);

}  // namespace bihom
