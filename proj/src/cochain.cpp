#include "bihom/cochain.hpp"

#include <algorithm>
#include <stdexcept>

#include "bihom/combinatorics.hpp"

namespace bihom {

Cochain::Cochain(std::size_t degree, std::size_t dim_g, std::size_t dim_v)
    : degree_(degree), dim_g_(dim_g), dim_v_(dim_v) {
  std::size_t n = dim_v_;
  for (std::size_t i = 0; i < degree_; ++i) n *= dim_g_;
  values_.assign(n, Rational(0));
}

Cochain Cochain::constant(std::size_t dim_g, Vec v) {
  Cochain c(0, dim_g, v.size());
  c.values_ = std::move(v);
  return c;
}

Cochain Cochain::from_tensor(const Tensor3& t) {
  if (t.d0() != t.d1()) {
    throw std::invalid_argument("cochain from tensor: first two extents must agree");
  }
  Cochain c(2, t.d0(), t.d2());
  for (std::size_t i = 0; i < t.d0(); ++i)
    for (std::size_t j = 0; j < t.d1(); ++j)
      for (std::size_t k = 0; k < t.d2(); ++k) c.values_[(i * t.d1() + j) * t.d2() + k] = t(i, j, k);
  return c;
}

std::size_t Cochain::flat_base(const std::vector<std::size_t>& idx) const {
  std::size_t base = 0;
  for (std::size_t i : idx) base = base * dim_g_ + i;
  return base * dim_v_;
}

Vec Cochain::value_vec(const std::vector<std::size_t>& idx) const {
  if (idx.size() != degree_) {
    throw std::invalid_argument("cochain value: wrong tuple length");
  }
  const std::size_t base = flat_base(idx);
  Vec out(dim_v_);
  for (std::size_t r = 0; r < dim_v_; ++r) out[r] = values_[base + r];
  return out;
}

void Cochain::add_to_value(const std::vector<std::size_t>& idx, const Vec& v,
                           const Rational& scale) {
  const std::size_t base = flat_base(idx);
  for (std::size_t r = 0; r < dim_v_; ++r) values_[base + r] += scale * v[r];
}

void Cochain::set_value(const std::vector<std::size_t>& idx, const Vec& v) {
  const std::size_t base = flat_base(idx);
  for (std::size_t r = 0; r < dim_v_; ++r) values_[base + r] = v[r];
}

Vec Cochain::eval(const std::vector<Vec>& args) const {
  if (args.size() != degree_) {
    throw std::invalid_argument("cochain eval: wrong argument count");
  }
  for (const Vec& a : args) {
    if (a.size() != dim_g_) {
      throw std::invalid_argument("cochain eval: argument has wrong dimension");
    }
  }
  Vec out(dim_v_);
  if (degree_ == 0) {
    for (std::size_t r = 0; r < dim_v_; ++r) out[r] = values_[r];
    return out;
  }
  // Only tuples drawn from the nonzero support of each argument contribute;
  // arguments are often sparse (basis vectors, twist columns), so iterate the
  // support product instead of all dim_g_^degree_ index tuples.
  std::vector<std::vector<std::size_t>> support(degree_);
  for (std::size_t t = 0; t < degree_; ++t) {
    for (std::size_t i = 0; i < dim_g_; ++i) {
      if (args[t][i] != 0) support[t].push_back(i);
    }
    if (support[t].empty()) return out;
  }
  std::vector<std::size_t> pos(degree_, 0);
  std::vector<std::size_t> idx(degree_);
  while (true) {
    Rational coeff = 1;
    for (std::size_t t = 0; t < degree_; ++t) {
      idx[t] = support[t][pos[t]];
      coeff *= args[t][idx[t]];
    }
    const std::size_t base = flat_base(idx);
    for (std::size_t r = 0; r < dim_v_; ++r) {
      const Rational& val = values_[base + r];
      if (val != 0) out[r] += coeff * val;
    }
    std::size_t t = degree_;
    bool done = true;
    while (t > 0) {
      --t;
      if (++pos[t] < support[t].size()) {
        done = false;
        break;
      }
      pos[t] = 0;
    }
    if (done) break;
  }
  return out;
}

Cochain Cochain::operator+(const Cochain& other) const {
  require_same_shape(other, "cochain sum");
  Cochain out(degree_, dim_g_, dim_v_);
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = values_[i] + other.values_[i];
  return out;
}

Cochain Cochain::operator-(const Cochain& other) const {
  require_same_shape(other, "cochain difference");
  Cochain out(degree_, dim_g_, dim_v_);
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = values_[i] - other.values_[i];
  return out;
}

Cochain Cochain::scaled(const Rational& c) const {
  Cochain out(degree_, dim_g_, dim_v_);
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = c * values_[i];
  return out;
}

bool Cochain::is_zero() const {
  for (const Rational& x : values_) {
    if (x != 0) return false;
  }
  return true;
}

void Cochain::require_same_shape(const Cochain& other, const char* what) const {
  if (degree_ != other.degree_ || dim_g_ != other.dim_g_ || dim_v_ != other.dim_v_) {
    throw std::invalid_argument(std::string(what) + ": shapes disagree");
  }
}

bool Cochain::is_skew() const {
  if (degree_ < 2) return true;
  bool ok = true;
  detail::for_each_tuple(dim_g_, degree_, [&](const std::vector<std::size_t>& idx) {
    if (!ok) return;
    std::vector<std::size_t> sorted = idx;
    const int sign = detail::sort_with_sign(sorted);
    Vec expect(dim_v_);
    if (sign != 0) {
      expect = value_vec(sorted);
      if (sign < 0) expect = vec_scale(-1, expect);
    }
    if (value_vec(idx) != expect) ok = false;
  });
  return ok;
}

bool Cochain::intertwines(const Matrix& alpha, const Matrix& beta, const Matrix& alpha_v,
                          const Matrix& beta_v) const {
  bool ok = true;
  detail::for_each_tuple(dim_g_, degree_, [&](const std::vector<std::size_t>& idx) {
    if (!ok) return;
    std::vector<Vec> a_args(degree_), b_args(degree_);
    for (std::size_t t = 0; t < degree_; ++t) {
      a_args[t] = alpha.col(idx[t]);
      b_args[t] = beta.col(idx[t]);
    }
    const Vec base = value_vec(idx);
    if (alpha_v.apply(base) != eval(a_args)) {
      ok = false;
      return;
    }
    if (beta_v.apply(base) != eval(b_args)) ok = false;
  });
  return ok;
}

Cochain Cochain::from_increasing_coords(std::size_t degree, std::size_t dim_g, std::size_t dim_v,
                                        const Vec& coords) {
  Cochain out(degree, dim_g, dim_v);
  if (degree == 0) {
    if (coords.size() != dim_v) {
      throw std::invalid_argument("cochain coords: wrong length");
    }
    out.values_ = coords;
    return out;
  }
  std::size_t rank = 0;
  detail::for_each_increasing(dim_g, degree, [&](const std::vector<std::size_t>& t) {
    Vec v(dim_v);
    for (std::size_t r = 0; r < dim_v; ++r) v[r] = coords[rank * dim_v + r];
    out.set_increasing(t, v);
    ++rank;
  });
  return out;
}

void Cochain::set_increasing(const std::vector<std::size_t>& idx, const Vec& v) {
  // Write the value on every rearrangement of idx, with the permutation sign.
  std::vector<std::size_t> perm(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) perm[i] = i;
  std::vector<std::size_t> arranged(idx.size());
  std::sort(perm.begin(), perm.end());
  do {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inv;
    for (std::size_t i = 0; i < perm.size(); ++i) arranged[i] = idx[perm[i]];
    set_value(arranged, (inv % 2 == 0) ? v : vec_scale(-1, v));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

Vec Cochain::increasing_coords() const {
  Vec out(detail::binom(dim_g_, degree_) * dim_v_);
  if (degree_ == 0) return values_;
  std::size_t rank = 0;
  detail::for_each_increasing(dim_g_, degree_, [&](const std::vector<std::size_t>& t) {
    const Vec v = value_vec(t);
    for (std::size_t r = 0; r < dim_v_; ++r) out[rank * dim_v_ + r] = v[r];
    ++rank;
  });
  return out;
}

std::string Cochain::describe() const {
  std::string out = "{";
  bool first = true;
  if (degree_ == 0) {
    out += vec_to_string(values_);
  } else {
    detail::for_each_increasing(dim_g_, degree_, [&](const std::vector<std::size_t>& t) {
      const Vec v = value_vec(t);
      if (is_zero_vec(v)) return;
      if (!first) out += ";";
      first = false;
      out += "(";
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(t[i] + 1);
      }
      out += ")->" + vec_to_string(v);
    });
  }
  out += "}";
  return out;
}

}  // namespace bihom
