#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <stdexcept>

#include "bihom/axioms.hpp"
#include "bihom/cochain_space.hpp"
#include "bihom/compatible.hpp"
#include "bihom/coboundary.hpp"
#include "bihom/constructions.hpp"
#include "bihom/nr.hpp"
#include "corpus.hpp"

using namespace bihom;

namespace {

Tensor3 skew3(std::size_t i, std::size_t j, std::size_t k, long v, std::size_t d) {
  Tensor3 t = Tensor3::cube(d);
  t(i, j, k) = Rational(v);
  t(j, i, k) = Rational(-v);
  return t;
}

}  // namespace

TEST_CASE("a compatible pair carries exactly two brackets", "[compatible]") {
  REQUIRE_THROWS_AS(CompatiblePair(corpus::g2()), std::invalid_argument);
  const CompatiblePair p = corpus::pair_mixed3();
  REQUIRE(p.dim() == 3);
  REQUIRE(p.first().on_basis(0, 1) == Vec{Rational(0), Rational(0), Rational(1)});
  REQUIRE(p.second().on_basis(0, 1) == Vec{Rational(0), Rational(1), Rational(0)});
}

TEST_CASE("the corpus pairs pass the six-term identity", "[compatible]") {
  for (const auto& p : corpus::pairs()) {
    CAPTURE(p.dim());
    REQUIRE(check_compatible_pair(p).all_ok());
  }
}

TEST_CASE("an incompatible pair is flagged with a mixed witness", "[compatible]") {
  // ([e1,e2]=e3, [e2,e3]=e2) are each Lie but the mixed identity fails on
  // (e1,e2,e3).
  const CompatiblePair bad(BiHomAlgebra(3, {skew3(0, 1, 2, 1, 3), skew3(1, 2, 1, 1, 3)},
                                        Matrix::identity(3), Matrix::identity(3)));
  const AxiomReport r = check_compatible_pair(bad);
  REQUIRE_FALSE(r.all_ok());
  REQUIRE_FALSE(r.compatible_ok);
  REQUIRE(r.skew_ok);
  REQUIRE(r.jacobi_ok);
  bool witness = false;
  for (const auto& v : r.violations)
    if (v.axiom == "compatibility" && v.indices.size() == 3) witness = true;
  REQUIRE(witness);
}

TEST_CASE("every linear combination of a compatible pair is a bracket", "[compatible]") {
  const CompatiblePair p = corpus::pair_mixed3();
  for (long lam = -2; lam <= 2; ++lam) {
    for (long eta = -2; eta <= 2; ++eta) {
      const BiHomAlgebra sum = lambda_sum_bracket(p, Rational(lam), Rational(eta));
      CAPTURE(lam, eta);
      REQUIRE(check_bihom_lie(sum).all_ok());
    }
  }
  const BiHomAlgebra both = lambda_sum_bracket(p, Rational(2), Rational(3));
  REQUIRE(both.bracket(0).on_basis(0, 1) ==
          Vec{Rational(0), Rational(3), Rational(2)});
}

TEST_CASE("nijenhuis condition and deformed bracket on the 2-dim algebra", "[compatible]") {
  const BiHomAlgebra a = corpus::g2();
  Matrix n(2, 2);
  n(0, 0) = 1;  // diag(1, 0)
  REQUIRE(nijenhuis_check(a, n));
  // [e1,e2]_N = [Ne1,e2] - [Ne2,e1] - N[e1,e2] = e2 - 0 - 0 = e2.
  REQUIRE(nijenhuis_bracket(a, n).on_basis(0, 1) == Vec{Rational(0), Rational(1)});
  REQUIRE(check_compatible_pair(nijenhuis_deform(a, n)).all_ok());

  Matrix swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  REQUIRE(nijenhuis_check(a, swap));
  REQUIRE(nijenhuis_bracket(a, swap).on_basis(0, 1) == Vec{Rational(-1), Rational(0)});
  REQUIRE(check_compatible_pair(nijenhuis_deform(a, swap)).all_ok());
}

TEST_CASE("a non-nijenhuis operator is rejected", "[compatible]") {
  const BiHomAlgebra a = corpus::h3();
  Matrix n = Matrix::identity(3);
  n(2, 2) = 0;  // diag(1,1,0): [Ne1,Ne2] = e3 but N(...) = 0
  REQUIRE_FALSE(nijenhuis_check(a, n));
  REQUIRE_THROWS_AS(nijenhuis_deform(a, n), std::domain_error);

  Matrix swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;  // does not commute with diag(1,2)
  REQUIRE_THROWS_AS(nijenhuis_check(corpus::g2_twisted(), swap), std::domain_error);
}

TEST_CASE("rota-baxter identity on the pinned examples", "[compatible]") {
  const BiHomAlgebra a = corpus::g2();
  REQUIRE(rb_check(a, Matrix(2, 2), 0, 0, Rational(5)));
  Matrix minus2 = Matrix::identity(2);
  minus2(0, 0) = -2;
  minus2(1, 1) = -2;
  REQUIRE(rb_check(a, minus2, 0, 0, Rational(2)));

  Matrix r(2, 2);
  r(1, 1) = 1;  // diag(0,1): lhs [0,e2] = 0, rhs R(e2) = e2
  REQUIRE_FALSE(rb_check(a, r, 0, 0, Rational(0)));

  // Induced bracket of R=0 is lambda times the original.
  REQUIRE(rb_induced_bracket(a, Matrix(2, 2), 0, 0, Rational(5)).on_basis(0, 1) ==
          Vec{Rational(0), Rational(5)});
}

TEST_CASE("rota-baxter identity with nontrivial twist powers", "[compatible]") {
  // On the twisted g2 with T = alpha beta, R = -3 id has
  //   lhs = 9 {p,q},  rhs = -3({T(-3p), q} + {p, T(-3q)} + 3{p,q}).
  // On (e1,e2): lhs = 27 e2; rhs = -3(ab(-3e1) paired .. ) = -3(-9-18+9) e2.
  const BiHomAlgebra t = corpus::g2_twisted();
  Matrix minus3 = Matrix::identity(2);
  minus3(0, 0) = -3;
  minus3(1, 1) = -3;
  REQUIRE(rb_check(t, minus3, 0, 0, Rational(3)));
  REQUIRE_FALSE(rb_check(t, minus3, 1, 1, Rational(3)));
}

TEST_CASE("compatible rota-baxter pairs", "[compatible]") {
  const BiHomAlgebra a = corpus::g2();
  Matrix minus2 = Matrix::identity(2);
  minus2(0, 0) = -2;
  minus2(1, 1) = -2;
  REQUIRE(rb_compatible_check(a, Matrix(2, 2), minus2, 0, 0, Rational(2)));
  // S = R at weight 0 reduces to twice the Rota-Baxter identity; the strictly
  // upper triangular nilpotent is Rota-Baxter at weight 0.
  Matrix n(2, 2);
  n(0, 1) = 1;
  REQUIRE(rb_check(a, n, 0, 0, Rational(0)));
  REQUIRE(rb_compatible_check(a, n, n, 0, 0, Rational(0)));
  // S = 0 is compatible with anything.
  REQUIRE(rb_compatible_check(a, minus2, Matrix(2, 2), 0, 0, Rational(2)));

  // id is Rota-Baxter at weight -1, but (id, id) fails the mixed identity:
  // lhs 2[p,q], rhs 4[p,q].
  REQUIRE(rb_check(a, Matrix::identity(2), 0, 0, Rational(-1)));
  REQUIRE_FALSE(rb_compatible_check(a, Matrix::identity(2), Matrix::identity(2), 0, 0,
                                    Rational(-1)));

  REQUIRE(check_compatible_pair(corpus::pair_rb_g2()).all_ok());
  REQUIRE(check_compatible_pair(corpus::pair_rb_g2_twisted()).all_ok());
  REQUIRE(corpus::pair_rb_g2().first().on_basis(0, 1) == Vec{Rational(0), Rational(2)});
  REQUIRE(corpus::pair_rb_g2().second().on_basis(0, 1) == Vec{Rational(0), Rational(-2)});
}

TEST_CASE("rota-baxter pair constructor enforces its preconditions", "[compatible]") {
  const BiHomAlgebra a = corpus::g2();
  Matrix r(2, 2);
  r(1, 1) = 1;  // fails rb_check at weight 0
  REQUIRE_THROWS_AS(rb_compatible_pair(a, r, Matrix(2, 2), 0, 0, Rational(0)),
                    std::domain_error);
}

TEST_CASE("maurer-cartan pair conditions with zero differentials", "[compatible]") {
  const Differential zero = Differential::zero();
  const BiHomAlgebra g = corpus::g2();
  const Cochain mu = bracket_cochain(g);
  const Cochain none(2, 2, 2);
  REQUIRE(mc_pair_check({none, none}, zero, zero, g));
  REQUIRE(mc_pair_check({mu, none}, zero, zero, g));
  REQUIRE(mc_pair_check({mu, mu}, zero, zero, g));

  const CompatiblePair nij = corpus::pair_nij_g2();
  REQUIRE(mc_pair_check({bracket_cochain(nij.algebra(), 0), bracket_cochain(nij.algebra(), 1)},
                        zero, zero, nij.algebra()));

  const BiHomAlgebra bad = corpus::nonjacobi3();
  REQUIRE_FALSE(mc_pair_check({bracket_cochain(bad), Cochain(2, 3, 3)}, zero, zero, bad));
}

TEST_CASE("maurer-cartan verdict matches compatibility on every corpus pair", "[compatible]") {
  const Differential zero = Differential::zero();
  for (const auto& p : corpus::pairs()) {
    const MCPair m{bracket_cochain(p.algebra(), 0), bracket_cochain(p.algebra(), 1)};
    CAPTURE(p.dim());
    REQUIRE(check_compatible_pair(p).all_ok() == mc_pair_check(m, zero, zero, p.algebra()));
  }
}

TEST_CASE("twisting by a maurer-cartan base preserves the verdict", "[compatible]") {
  // Base (mu, mu) on g2, increment proportional to mu: still Maurer-Cartan.
  const CompatiblePair nij = corpus::pair_nij_g2();
  const Cochain mu1 = bracket_cochain(nij.algebra(), 0);
  const Cochain mu2 = bracket_cochain(nij.algebra(), 1);
  REQUIRE(twisted_mc_check({mu1, mu2}, {mu1.scaled(Rational(3)), Cochain(2, 2, 2)},
                           nij.algebra()));

  // Heisenberg base with an incompatible increment in the second slot.
  const BiHomAlgebra h = corpus::h3();
  const Cochain heis = bracket_cochain(h);
  Cochain bad2(2, 3, 3);
  bad2.set_increasing({1, 2}, basis_vec(3, 1));  // [e2,e3] = e2
  REQUIRE_FALSE(twisted_mc_check({heis, Cochain(2, 3, 3)}, {Cochain(2, 3, 3), bad2}, h));

  // The base itself must be Maurer-Cartan.
  const Cochain nj = bracket_cochain(corpus::nonjacobi3());
  REQUIRE_THROWS_AS(
      twisted_mc_check({nj, Cochain(2, 3, 3)}, {Cochain(2, 3, 3), Cochain(2, 3, 3)},
                       corpus::nonjacobi3()),
      std::domain_error);
}

TEST_CASE("randomized equivalence between compatibility and maurer-cartan", "[compatible]") {
  const McEquivalenceStats stats = mc_equivalence_property(20240817u, 60);
  REQUIRE(stats.trials == 60);
  REQUIRE(stats.agreements == 60);
  REQUIRE(stats.compatible_count >= 1);
}

TEST_CASE("two-action module checks across the corpus", "[compatible]") {
  for (const auto& p : corpus::pairs()) {
    CAPTURE(p.dim());
    REQUIRE(check_compatible_representation(p, adjoint_representation(p.algebra())).all_ok());
  }
}

TEST_CASE("swapping the adjoint actions breaks the mixed module condition", "[compatible]") {
  const CompatiblePair p = corpus::pair_mixed3();
  const Representation ad = adjoint_representation(p.algebra());
  const Representation swapped(3, 3, {ad.action(1), ad.action(0)}, ad.alpha_v(), ad.beta_v());
  const AxiomReport r = check_compatible_representation(p, swapped);
  REQUIRE_FALSE(r.all_ok());
  REQUIRE_FALSE(r.compatible_ok);
}

TEST_CASE("summed structures form a module again", "[compatible]") {
  const CompatiblePair p = corpus::pair_mixed3();
  const Representation ad = adjoint_representation(p.algebra());
  const auto [sum, mod] = lambda_sum_representation(p, ad, Rational(1), Rational(1));
  REQUIRE(sum.bracket(0).on_basis(0, 1) == Vec{Rational(0), Rational(1), Rational(1)});
  REQUIRE(mod.action_count() == 1);
  REQUIRE(check_representation(sum, mod).all_ok());
}

TEST_CASE("compatible semidirect product pairs the blocks index by index", "[compatible]") {
  const CompatiblePair sd = corpus::pair_semidirect_mixed();
  REQUIRE(sd.dim() == 6);
  REQUIRE(check_compatible_pair(sd).all_ok());
  // First bracket, g block: [e1,e2]_1 = e3; second bracket: [e1,e2]_2 = e2.
  REQUIRE(sd.first().on_basis(0, 1)[2] == Rational(1));
  REQUIRE(sd.second().on_basis(0, 1)[1] == Rational(1));
  // V block sees the matching action: [(e1,0),(0,v2)]_2 = (0, [e1,v2]_2) = e5.
  REQUIRE(sd.second().on_basis(0, 4)[4] == Rational(1));
}

TEST_CASE("lifting embeds values in the module block", "[compatible]") {
  Cochain f(1, 2, 2);
  f.set_value({0}, {Rational(1), Rational(2)});
  const Cochain lifted = lift_cochain(f);
  REQUIRE(lifted.degree() == 1);
  REQUIRE(lifted.dim_g() == 4);
  REQUIRE(lifted.value_vec({0}) == Vec{Rational(0), Rational(0), Rational(1), Rational(2)});
  REQUIRE(is_zero_vec(lifted.value_vec({2})));  // module arguments are killed
  REQUIRE(lift_cochain(Cochain(2, 2, 2)).is_zero());
  REQUIRE_FALSE(lifted.is_zero());
}

TEST_CASE("lifted coboundary identity against the graded bracket", "[compatible]") {
  for (const auto& p : {corpus::pair_nij_g2(), corpus::pair_mixed3(),
                        corpus::pair_mixed3_twisted()}) {
    const Representation ad = adjoint_representation(p.algebra());
    const CompatiblePair sd = compatible_semidirect(p, ad);
    const Cochain pi1 = bracket_cochain(sd.algebra(), 0);
    for (std::size_t n = 1; n <= 2; ++n) {
      for (const auto& f : cochain_space_basis(p.algebra(), ad, n).basis) {
        const Cochain lhs = lift_cochain(ce_coboundary(p.algebra(), ad, f, 0, 0));
        Cochain rhs = nr_bracket_rev(lift_cochain(f), pi1, sd.algebra());
        if (n % 2 == 0) rhs = rhs.scaled(Rational(-1));
        CAPTURE(p.dim(), n);
        REQUIRE(lhs == rhs);
      }
    }
  }
}
