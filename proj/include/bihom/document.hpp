#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bihom/algebra.hpp"

namespace bihom {

// One named candidate operator (Nijenhuis / Rota-Baxter) with its attributes.
struct OperatorSpec {
  std::string name;
  Matrix matrix{0, 0};
  std::string kind;  // freeform tag: "nijenhuis", "rota-baxter", "twist", ...
  std::size_t s = 0;
  std::size_t l = 0;
  Rational lambda = Rational(0);
};

struct ActionSpec {
  std::string name;
  Tensor3 rho{0, 0, 0};
};

struct RepresentationSpec {
  std::string name;
  std::size_t dim_v = 0;
  Matrix alpha_v{0, 0};
  Matrix beta_v{0, 0};
  std::vector<ActionSpec> actions;

  Representation build(std::size_t dim_g) const;
  std::size_t action_index(const std::string& action_name) const;
};

struct BracketSpec {
  std::string name;
  Tensor3 c{0, 0, 0};
};

// A fully validated input file: the algebra data plus optional modules and
// operators.  All rationals are given as integer or "p/q" strings; every
// shape is checked at parse time against dim / dimV.
struct InputDocument {
  std::size_t dim = 0;
  Matrix alpha{0, 0};
  Matrix beta{0, 0};
  std::vector<BracketSpec> brackets;
  std::vector<RepresentationSpec> representations;
  std::vector<OperatorSpec> operators;

  BiHomAlgebra algebra() const;

  std::size_t bracket_index(const std::string& name) const;
  const RepresentationSpec& representation(const std::string& name) const;
  const OperatorSpec& op(const std::string& name) const;

  friend bool operator==(const InputDocument& a, const InputDocument& b);
};

InputDocument parse_input(const std::string& path);
InputDocument parse_input_text(const std::string& text);
std::string serialize(const InputDocument& doc);

}  // namespace bihom
