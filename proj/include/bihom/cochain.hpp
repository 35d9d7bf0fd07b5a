#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bihom/matrix.hpp"
#include "bihom/tensor3.hpp"

namespace bihom {

// A V-valued multilinear map on g, stored as a dense value tensor over all
// basis index tuples.  Degree 0 is a single vector of V.
//
// Skew-symmetry is a property, not a storage invariant: cohomology works with
// skew cochains (built via set_increasing / from_increasing_coords), while
// bracket tensors of twisted algebras enter the graded-bracket machinery as
// honest non-skew bilinear maps.
class Cochain {
 public:
  Cochain() = default;
  Cochain(std::size_t degree, std::size_t dim_g, std::size_t dim_v);

  static Cochain constant(std::size_t dim_g, Vec v);
  static Cochain from_tensor(const Tensor3& t);
  // Rebuild a skew cochain from its coordinates over strictly increasing
  // tuples (lexicographic order, dim_v entries per tuple).
  static Cochain from_increasing_coords(std::size_t degree, std::size_t dim_g, std::size_t dim_v,
                                        const Vec& coords);

  std::size_t degree() const { return degree_; }
  std::size_t dim_g() const { return dim_g_; }
  std::size_t dim_v() const { return dim_v_; }

  // Value on a tuple of basis elements.
  Vec value_vec(const std::vector<std::size_t>& idx) const;
  // Multilinear evaluation on arbitrary vectors.
  Vec eval(const std::vector<Vec>& args) const;

  void set_value(const std::vector<std::size_t>& idx, const Vec& v);
  void add_to_value(const std::vector<std::size_t>& idx, const Vec& v,
                    const Rational& scale = Rational(1));
  // Write v on an increasing tuple and propagate to all rearrangements with
  // the permutation sign.
  void set_increasing(const std::vector<std::size_t>& idx, const Vec& v);

  // Coordinates over strictly increasing tuples, lexicographic.
  Vec increasing_coords() const;

  Cochain operator+(const Cochain& other) const;
  Cochain operator-(const Cochain& other) const;
  Cochain scaled(const Rational& c) const;
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree_ == b.degree_ && a.dim_g_ == b.dim_g_ && a.dim_v_ == b.dim_v_ &&
           a.values_ == b.values_;
  }

  bool is_zero() const;
  bool is_skew() const;
  bool intertwines(const Matrix& alpha, const Matrix& beta, const Matrix& alpha_v,
                   const Matrix& beta_v) const;

  // Compact human-readable form: nonzero values on increasing tuples.
  std::string describe() const;

 private:
  std::size_t flat_base(const std::vector<std::size_t>& idx) const;
  void require_same_shape(const Cochain& other, const char* what) const;

  std::size_t degree_ = 0;
  std::size_t dim_g_ = 0;
  std::size_t dim_v_ = 1;
  std::vector<Rational> values_;
};

}  // namespace bihom
