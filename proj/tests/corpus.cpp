#include "corpus.hpp"

#include "bihom/constructions.hpp"

namespace corpus {

using bihom::BiHomAlgebra;
using bihom::CompatiblePair;
using bihom::Matrix;
using bihom::Rational;
using bihom::Representation;
using bihom::Tensor3;

namespace {

struct SkewEntry {
  std::size_t i, j, k;
  long v;
};

// Cube tensor with t(i,j,k) = v and t(j,i,k) = -v for each listed entry.
Tensor3 skew_cube(std::size_t d, std::initializer_list<SkewEntry> entries) {
  Tensor3 t = Tensor3::cube(d);
  for (const auto& e : entries) {
    t(e.i, e.j, e.k) = Rational(e.v);
    t(e.j, e.i, e.k) = Rational(-e.v);
  }
  return t;
}

Matrix diag(std::initializer_list<long> entries) {
  Matrix m(entries.size(), entries.size());
  std::size_t r = 0;
  for (long e : entries) {
    m(r, r) = Rational(e);
    ++r;
  }
  return m;
}

}  // namespace

BiHomAlgebra abelian1() {
  return BiHomAlgebra(1, {Tensor3::cube(1)}, Matrix::identity(1), Matrix::identity(1));
}

BiHomAlgebra g2() {
  return BiHomAlgebra(2, {skew_cube(2, {{0, 1, 1, 1}})}, Matrix::identity(2),
                      Matrix::identity(2));
}

BiHomAlgebra h3() {
  return BiHomAlgebra(3, {skew_cube(3, {{0, 1, 2, 1}})}, Matrix::identity(3),
                      Matrix::identity(3));
}

BiHomAlgebra g2_twisted() { return bihom::yau_twist(g2(), diag({1, 2}), diag({1, 3})); }

BiHomAlgebra h3_twisted() {
  return bihom::yau_twist(h3(), diag({1, 2, 2}), diag({1, 3, 3}));
}

BiHomAlgebra sd_g2_adjoint() {
  const BiHomAlgebra a = g2();
  return bihom::semidirect_product(a, bihom::adjoint_representation(a));
}

BiHomAlgebra sd_a1_trivial() {
  const BiHomAlgebra a = abelian1();
  const Representation line(1, 1, {Tensor3(1, 1, 1)}, Matrix::identity(1),
                            Matrix::identity(1));
  return bihom::semidirect_product(a, line);
}

BiHomAlgebra nonjacobi3() {
  return BiHomAlgebra(3, {skew_cube(3, {{0, 1, 2, 1}, {0, 2, 0, 1}})}, Matrix::identity(3),
                      Matrix::identity(3));
}

std::vector<BiHomAlgebra> lie_algebras() {
  return {abelian1(),   g2(),          h3(),           g2_twisted(),
          h3_twisted(), sd_g2_adjoint(), sd_a1_trivial()};
}

std::vector<BiHomAlgebra> regular_lie_algebras() { return lie_algebras(); }

CompatiblePair pair_abelian1() {
  return CompatiblePair(BiHomAlgebra(1, {Tensor3::cube(1), Tensor3::cube(1)},
                                     Matrix::identity(1), Matrix::identity(1)));
}

CompatiblePair pair_nij_g2() { return bihom::nijenhuis_deform(g2(), diag({1, 0})); }

CompatiblePair pair_nij_h3() { return bihom::nijenhuis_deform(h3(), diag({1, 0, 0})); }

CompatiblePair pair_mixed3() {
  return CompatiblePair(BiHomAlgebra(3,
                                     {skew_cube(3, {{0, 1, 2, 1}}),
                                      skew_cube(3, {{0, 1, 1, 1}})},
                                     Matrix::identity(3), Matrix::identity(3)));
}

CompatiblePair pair_mixed3_twisted() {
  return CompatiblePair(
      bihom::yau_twist(pair_mixed3().algebra(), diag({1, 2, 2}), diag({1, 3, 3})));
}

CompatiblePair pair_rb_g2() {
  return bihom::rb_compatible_pair(g2(), Matrix(2, 2), diag({-2, -2}), 0, 0, Rational(2));
}

CompatiblePair pair_rb_g2_twisted() {
  return bihom::rb_compatible_pair(g2_twisted(), Matrix(2, 2), diag({-3, -3}), 0, 0,
                                   Rational(3));
}

CompatiblePair pair_semidirect() {
  const CompatiblePair p = pair_nij_g2();
  return bihom::compatible_semidirect(p, bihom::adjoint_representation(p.algebra()));
}

CompatiblePair pair_semidirect_mixed() {
  const CompatiblePair p = pair_mixed3();
  return bihom::compatible_semidirect(p, bihom::adjoint_representation(p.algebra()));
}

std::vector<CompatiblePair> pairs() {
  return {pair_abelian1(),       pair_nij_g2(), pair_nij_h3(),
          pair_mixed3(),         pair_mixed3_twisted(), pair_rb_g2(),
          pair_rb_g2_twisted(),  pair_semidirect(),     pair_semidirect_mixed()};
}

std::vector<CompatiblePair> twisted_pairs() {
  return {pair_mixed3_twisted(), pair_rb_g2_twisted()};
}

}  // namespace corpus
