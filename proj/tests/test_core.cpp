#include <catch2/catch_amalgamated.hpp>
#include <stdexcept>

#include "bihom/algebra.hpp"
#include "bihom/axioms.hpp"
#include "bihom/constructions.hpp"
#include "bihom/rational.hpp"
#include "corpus.hpp"

using namespace bihom;

TEST_CASE("rational parsing accepts integers and reduced fractions", "[rational]") {
  REQUIRE(parse_rational("3") == Rational(3));
  REQUIRE(parse_rational("-7") == Rational(-7));
  REQUIRE(parse_rational("2/4") == Rational(1, 2));
  REQUIRE(parse_rational("-6/4") == Rational(-3, 2));
  REQUIRE(rational_to_string(Rational(5, 1)) == "5");
  REQUIRE(rational_to_string(Rational(-3, 2)) == "-3/2");
}

TEST_CASE("rational parsing rejects malformed input", "[rational]") {
  REQUIRE_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_rational("3/0"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_rational("x"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_rational(""), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_rational("1/1/1"), std::invalid_argument);
}

TEST_CASE("matrix product, powers and block structure", "[matrix]") {
  Matrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 3;
  a(1, 1) = 4;
  const Matrix sq = a * a;
  REQUIRE(sq(0, 0) == Rational(7));
  REQUIRE(sq(0, 1) == Rational(10));
  REQUIRE(sq(1, 0) == Rational(15));
  REQUIRE(sq(1, 1) == Rational(22));
  REQUIRE(a.pow(0) == Matrix::identity(2));
  REQUIRE(a.pow(3) == a * a * a);

  const Matrix b = Matrix::block_diag(Matrix::identity(1), a);
  REQUIRE(b.rows() == 3);
  REQUIRE(b(0, 0) == Rational(1));
  REQUIRE(b(1, 1) == Rational(1));
  REQUIRE(b(2, 2) == Rational(4));
  REQUIRE(b(0, 1) == Rational(0));

  const Vec v = a.apply({Rational(1), Rational(-1)});
  REQUIRE(v == Vec{Rational(-1), Rational(-1)});
  REQUIRE(a.col(1) == Vec{Rational(2), Rational(4)});
}

TEST_CASE("tensor contraction is bilinear over basis expansions", "[tensor]") {
  Tensor3 t = Tensor3::cube(2);
  t(0, 1, 1) = 1;
  t(1, 0, 1) = -1;
  REQUIRE(t.on_basis(0, 1) == Vec{Rational(0), Rational(1)});
  // [e1 + 2 e2, 3 e1] = 3 [e2+..] expansion: only the (1,0) slot contributes.
  const Vec u{Rational(1), Rational(2)};
  const Vec w{Rational(3), Rational(0)};
  REQUIRE(t.contract(u, w) == Vec{Rational(0), Rational(-6)});
  REQUIRE((t - t).is_zero());
  REQUIRE(t.scaled(Rational(2)).on_basis(0, 1) == Vec{Rational(0), Rational(2)});
}

TEST_CASE("algebra construction enforces shapes and commuting maps", "[algebra]") {
  Tensor3 t = Tensor3::cube(2);
  REQUIRE_THROWS_AS(BiHomAlgebra(2, {}, Matrix::identity(2), Matrix::identity(2)),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(BiHomAlgebra(2, {Tensor3::cube(3)}, Matrix::identity(2), Matrix::identity(2)),
                    std::invalid_argument);
  Matrix a = Matrix::identity(2);
  a(0, 1) = 1;  // upper triangular
  Matrix b = Matrix::identity(2);
  b(1, 0) = 1;  // lower triangular: ab != ba
  REQUIRE_THROWS_AS(BiHomAlgebra(2, {t}, a, b), std::invalid_argument);

  const BiHomAlgebra ok = corpus::g2();
  REQUIRE(ok.dim() == 2);
  REQUIRE(ok.bracket_count() == 1);
  REQUIRE(ok.regular());
  REQUIRE(ok.bracket_eval(0, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}) ==
          Vec{Rational(0), Rational(1)});
}

TEST_CASE("axiom battery passes on the Lie corpus", "[axioms]") {
  for (const auto& a : corpus::lie_algebras()) {
    for (std::size_t w = 0; w < a.bracket_count(); ++w) {
      const AxiomReport r = check_bihom_lie(a, w);
      CAPTURE(a.dim(), w);
      REQUIRE(r.all_ok());
      REQUIRE(check_multiplicative(a, w).all_ok());
    }
  }
}

TEST_CASE("twisted skew-symmetry is detected on twisted corpus members", "[axioms]") {
  // {e1,e2} = 3 e2, {e2,e1} = -2 e2 is not plain skew but is BiHom-skew for
  // alpha = diag(1,2), beta = diag(1,3).
  const BiHomAlgebra t = corpus::g2_twisted();
  REQUIRE(t.bracket(0).on_basis(0, 1) == Vec{Rational(0), Rational(3)});
  REQUIRE(t.bracket(0).on_basis(1, 0) == Vec{Rational(0), Rational(-2)});
  REQUIRE(check_bihom_lie(t).all_ok());
}

TEST_CASE("jacobi failures are reported with a witness", "[axioms]") {
  const AxiomReport r = check_bihom_lie(corpus::nonjacobi3());
  REQUIRE_FALSE(r.all_ok());
  REQUIRE_FALSE(r.jacobi_ok);
  REQUIRE(r.skew_ok);
  REQUIRE_FALSE(r.violations.empty());
  bool found = false;
  for (const auto& v : r.violations) {
    if (v.axiom == "bihom-jacobi") {
      found = true;
      REQUIRE(v.indices.size() == 3);
      REQUIRE_FALSE(v.lhs == v.rhs);
    }
  }
  REQUIRE(found);
}

TEST_CASE("morphism check distinguishes scaling from swapping on g2", "[axioms]") {
  const BiHomAlgebra a = corpus::g2();
  Matrix f(2, 2);
  f(0, 0) = 1;
  f(1, 1) = 2;
  REQUIRE(check_morphism(f, a, a));
  Matrix swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  REQUIRE_FALSE(check_morphism(swap, a, a));
}

TEST_CASE("adjoint module axioms hold across the corpus", "[axioms]") {
  for (const auto& a : corpus::lie_algebras()) {
    const Representation ad = adjoint_representation(a);
    for (std::size_t w = 0; w < a.bracket_count(); ++w) {
      CAPTURE(a.dim(), w);
      REQUIRE(check_representation(a, ad, w, w).all_ok());
    }
  }
}

TEST_CASE("a non-action is flagged by the module axioms", "[axioms]") {
  const BiHomAlgebra a = corpus::g2();
  // rho(e1) = rho(e2) = identity on a 1-dim space is not an action for g2:
  // the bracket condition forces rho([e1,e2]) = 0 but rho(e2) = 1.
  Tensor3 rho(2, 1, 1);
  rho(0, 0, 0) = 1;
  rho(1, 0, 0) = 1;
  const Representation v(2, 1, {rho}, Matrix::identity(1), Matrix::identity(1));
  REQUIRE_FALSE(check_representation(a, v).all_ok());
}
