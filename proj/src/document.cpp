#include "bihom/document.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bihom/rational.hpp"

namespace bihom {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::runtime_error(where + ": " + what);
}

Rational parse_entry(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected an integer or a rational string");
}

std::size_t parse_count(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    fail(where, "expected a non-negative integer");
  }
  return static_cast<std::size_t>(j.get<long long>());
}

std::string parse_name(const Json& j, const std::string& where) {
  if (!j.is_string() || j.get<std::string>().empty()) {
    fail(where, "expected a non-empty name string");
  }
  return j.get<std::string>();
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    fail(where, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

Matrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols,
                    const std::string& where) {
  if (!j.is_array() || j.size() != rows) {
    fail(where, "expected " + std::to_string(rows) + " rows, got " +
                    std::to_string(j.is_array() ? j.size() : 0));
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || row.size() != cols) {
      fail(where + "[" + std::to_string(r) + "]",
           "expected " + std::to_string(cols) + " entries, got " +
               std::to_string(row.is_array() ? row.size() : 0));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = parse_entry(row[c], where + "[" + std::to_string(r) + "][" +
                                        std::to_string(c) + "]");
    }
  }
  return m;
}

Tensor3 parse_tensor(const Json& j, std::size_t d0, std::size_t d1, std::size_t d2,
                     const std::string& where) {
  if (!j.is_array() || j.size() != d0) {
    fail(where, "expected " + std::to_string(d0) + " slices, got " +
                    std::to_string(j.is_array() ? j.size() : 0));
  }
  Tensor3 t(d0, d1, d2);
  for (std::size_t i = 0; i < d0; ++i) {
    const std::string wi = where + "[" + std::to_string(i) + "]";
    const Json& slice = j[i];
    if (!slice.is_array() || slice.size() != d1) {
      fail(wi, "expected " + std::to_string(d1) + " rows, got " +
                   std::to_string(slice.is_array() ? slice.size() : 0));
    }
    for (std::size_t k = 0; k < d1; ++k) {
      const std::string wk = wi + "[" + std::to_string(k) + "]";
      const Json& row = slice[k];
      if (!row.is_array() || row.size() != d2) {
        fail(wk, "expected " + std::to_string(d2) + " entries, got " +
                     std::to_string(row.is_array() ? row.size() : 0));
      }
      for (std::size_t r = 0; r < d2; ++r) {
        t(i, k, r) = parse_entry(row[r], wk + "[" + std::to_string(r) + "]");
      }
    }
  }
  return t;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json tensor_to_json(const Tensor3& t) {
  Json slices = Json::array();
  for (std::size_t i = 0; i < t.d0(); ++i) {
    Json slice = Json::array();
    for (std::size_t k = 0; k < t.d1(); ++k) {
      Json row = Json::array();
      for (std::size_t r = 0; r < t.d2(); ++r) row.push_back(rational_to_string(t(i, k, r)));
      slice.push_back(std::move(row));
    }
    slices.push_back(std::move(slice));
  }
  return slices;
}

}  // namespace

Representation RepresentationSpec::build(std::size_t dim_g) const {
  std::vector<Tensor3> rho;
  rho.reserve(actions.size());
  for (const ActionSpec& a : actions) rho.push_back(a.rho);
  return Representation(dim_g, dim_v, rho, alpha_v, beta_v);
}

std::size_t RepresentationSpec::action_index(const std::string& action_name) const {
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (actions[i].name == action_name) return i;
  }
  throw std::runtime_error("unknown action \"" + action_name + "\" in representation \"" + name +
                           "\"");
}

BiHomAlgebra InputDocument::algebra() const {
  std::vector<Tensor3> tensors;
  tensors.reserve(brackets.size());
  for (const BracketSpec& b : brackets) tensors.push_back(b.c);
  return BiHomAlgebra(dim, tensors, alpha, beta);
}

std::size_t InputDocument::bracket_index(const std::string& name) const {
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    if (brackets[i].name == name) return i;
  }
  throw std::runtime_error("unknown bracket \"" + name + "\"");
}

const RepresentationSpec& InputDocument::representation(const std::string& name) const {
  for (const RepresentationSpec& r : representations) {
    if (r.name == name) return r;
  }
  throw std::runtime_error("unknown representation \"" + name + "\"");
}

const OperatorSpec& InputDocument::op(const std::string& name) const {
  for (const OperatorSpec& o : operators) {
    if (o.name == name) return o;
  }
  throw std::runtime_error("unknown operator \"" + name + "\"");
}

bool operator==(const InputDocument& a, const InputDocument& b) {
  if (a.dim != b.dim || !(a.alpha == b.alpha) || !(a.beta == b.beta)) return false;
  if (a.brackets.size() != b.brackets.size() ||
      a.representations.size() != b.representations.size() ||
      a.operators.size() != b.operators.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.brackets.size(); ++i) {
    if (a.brackets[i].name != b.brackets[i].name || !(a.brackets[i].c == b.brackets[i].c)) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.representations.size(); ++i) {
    const RepresentationSpec& x = a.representations[i];
    const RepresentationSpec& y = b.representations[i];
    if (x.name != y.name || x.dim_v != y.dim_v || !(x.alpha_v == y.alpha_v) ||
        !(x.beta_v == y.beta_v) || x.actions.size() != y.actions.size()) {
      return false;
    }
    for (std::size_t k = 0; k < x.actions.size(); ++k) {
      if (x.actions[k].name != y.actions[k].name || !(x.actions[k].rho == y.actions[k].rho)) {
        return false;
      }
    }
  }
  for (std::size_t i = 0; i < a.operators.size(); ++i) {
    const OperatorSpec& x = a.operators[i];
    const OperatorSpec& y = b.operators[i];
    if (x.name != y.name || !(x.matrix == y.matrix) || x.kind != y.kind || x.s != y.s ||
        x.l != y.l || x.lambda != y.lambda) {
      return false;
    }
  }
  return true;
}

InputDocument parse_input_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(std::string("input is not well-formed: ") + e.what());
  }
  if (!j.is_object()) fail("document", "expected a top-level object");

  InputDocument doc;
  doc.dim = parse_count(field(j, "dim", "document"), "dim");
  doc.alpha = parse_matrix(field(j, "alpha", "document"), doc.dim, doc.dim, "alpha");
  doc.beta = parse_matrix(field(j, "beta", "document"), doc.dim, doc.dim, "beta");

  const Json& brackets = field(j, "brackets", "document");
  if (!brackets.is_array() || brackets.empty()) {
    fail("brackets", "expected a non-empty list");
  }
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    const std::string where = "brackets[" + std::to_string(i) + "]";
    BracketSpec spec;
    spec.name = parse_name(field(brackets[i], "name", where), where + ".name");
    spec.c = parse_tensor(field(brackets[i], "c", where), doc.dim, doc.dim, doc.dim,
                          where + ".c");
    doc.brackets.push_back(std::move(spec));
  }

  if (j.contains("representations")) {
    const Json& reps = j.at("representations");
    if (!reps.is_array()) fail("representations", "expected a list");
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const std::string where = "representations[" + std::to_string(i) + "]";
      RepresentationSpec spec;
      spec.name = parse_name(field(reps[i], "name", where), where + ".name");
      spec.dim_v = parse_count(field(reps[i], "dimV", where), where + ".dimV");
      spec.alpha_v = parse_matrix(field(reps[i], "alphaV", where), spec.dim_v, spec.dim_v,
                                  where + ".alphaV");
      spec.beta_v = parse_matrix(field(reps[i], "betaV", where), spec.dim_v, spec.dim_v,
                                 where + ".betaV");
      const Json& actions = field(reps[i], "actions", where);
      if (!actions.is_array() || actions.empty()) {
        fail(where + ".actions", "expected a non-empty list");
      }
      for (std::size_t k = 0; k < actions.size(); ++k) {
        const std::string wa = where + ".actions[" + std::to_string(k) + "]";
        ActionSpec action;
        action.name = parse_name(field(actions[k], "name", wa), wa + ".name");
        action.rho = parse_tensor(field(actions[k], "rho", wa), doc.dim, spec.dim_v, spec.dim_v,
                                  wa + ".rho");
        spec.actions.push_back(std::move(action));
      }
      doc.representations.push_back(std::move(spec));
    }
  }

  if (j.contains("operators")) {
    const Json& ops = j.at("operators");
    if (!ops.is_array()) fail("operators", "expected a list");
    for (std::size_t i = 0; i < ops.size(); ++i) {
      const std::string where = "operators[" + std::to_string(i) + "]";
      OperatorSpec spec;
      spec.name = parse_name(field(ops[i], "name", where), where + ".name");
      spec.matrix = parse_matrix(field(ops[i], "matrix", where), doc.dim, doc.dim,
                                 where + ".matrix");
      if (ops[i].contains("kind")) {
        spec.kind = parse_name(ops[i].at("kind"), where + ".kind");
      }
      if (ops[i].contains("s")) spec.s = parse_count(ops[i].at("s"), where + ".s");
      if (ops[i].contains("l")) spec.l = parse_count(ops[i].at("l"), where + ".l");
      if (ops[i].contains("lambda")) {
        spec.lambda = parse_entry(ops[i].at("lambda"), where + ".lambda");
      }
      doc.operators.push_back(std::move(spec));
    }
  }

  // Constructing the algebra re-validates shapes and alpha.beta = beta.alpha.
  doc.algebra();
  for (const RepresentationSpec& r : doc.representations) r.build(doc.dim);
  return doc;
}

InputDocument parse_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_input_text(buffer.str());
}

std::string serialize(const InputDocument& doc) {
  Json j;
  j["dim"] = doc.dim;
  j["alpha"] = matrix_to_json(doc.alpha);
  j["beta"] = matrix_to_json(doc.beta);
  Json brackets = Json::array();
  for (const BracketSpec& b : doc.brackets) {
    brackets.push_back(Json{{"name", b.name}, {"c", tensor_to_json(b.c)}});
  }
  j["brackets"] = std::move(brackets);
  if (!doc.representations.empty()) {
    Json reps = Json::array();
    for (const RepresentationSpec& r : doc.representations) {
      Json actions = Json::array();
      for (const ActionSpec& a : r.actions) {
        actions.push_back(Json{{"name", a.name}, {"rho", tensor_to_json(a.rho)}});
      }
      reps.push_back(Json{{"name", r.name},
                          {"dimV", r.dim_v},
                          {"alphaV", matrix_to_json(r.alpha_v)},
                          {"betaV", matrix_to_json(r.beta_v)},
                          {"actions", std::move(actions)}});
    }
    j["representations"] = std::move(reps);
  }
  if (!doc.operators.empty()) {
    Json ops = Json::array();
    for (const OperatorSpec& o : doc.operators) {
      Json entry{{"name", o.name}, {"matrix", matrix_to_json(o.matrix)}};
      if (!o.kind.empty()) entry["kind"] = o.kind;
      if (o.s != 0) entry["s"] = o.s;
      if (o.l != 0) entry["l"] = o.l;
      if (o.lambda != Rational(0)) entry["lambda"] = rational_to_string(o.lambda);
      ops.push_back(std::move(entry));
    }
    j["operators"] = std::move(ops);
  }
  return j.dump(2) + "\n";
}

}  // namespace bihom
