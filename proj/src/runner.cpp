#include "bihom/runner.hpp"

#include <stdexcept>

#include "bihom/axioms.hpp"
#include "bihom/ccohomology.hpp"
#include "bihom/coboundary.hpp"
#include "bihom/cohomology.hpp"
#include "bihom/combinatorics.hpp"
#include "bihom/compatible.hpp"
#include "bihom/constructions.hpp"
#include "bihom/nr.hpp"
#include "bihom/rational.hpp"
#include "bihom/report.hpp"

namespace bihom {

namespace {

std::size_t bracket_slot(const InputDocument& doc, const std::string& name,
                         std::size_t fallback) {
  if (!name.empty()) return doc.bracket_index(name);
  if (fallback >= doc.brackets.size()) {
    throw std::runtime_error("the document does not carry enough brackets for this command");
  }
  return fallback;
}

// The module to use plus the action slots paired with the two bracket slots.
struct ModuleChoice {
  Representation rep;
  std::string name;
  std::size_t action1 = 0;
  std::size_t action2 = 1;
};

ModuleChoice resolve_module(const InputDocument& doc, const BiHomAlgebra& algebra,
                            const Flags& flags, std::size_t b1, std::size_t b2,
                            bool needs_two) {
  if (flags.rep.empty()) {
    ModuleChoice choice{adjoint_representation(algebra), "adjoint", b1, b2};
    return choice;
  }
  const RepresentationSpec& spec = doc.representation(flags.rep);
  ModuleChoice choice{spec.build(doc.dim), spec.name, 0, 1};
  if (!flags.action.empty()) {
    choice.action1 = spec.action_index(flags.action);
  } else if (b1 < spec.actions.size()) {
    choice.action1 = b1;
  }
  if (!flags.action2.empty()) {
    choice.action2 = spec.action_index(flags.action2);
  } else if (needs_two && b2 < spec.actions.size()) {
    choice.action2 = b2;
  }
  if (needs_two && choice.rep.action_count() < 2) {
    throw std::runtime_error("this command needs a representation with two actions");
  }
  return choice;
}

// A two-action module in slot order (action1, action2), for the pair API.
Representation ordered_pair_module(const ModuleChoice& choice) {
  return Representation(choice.rep.dim_g(), choice.rep.dim_v(),
                        {choice.rep.action(choice.action1), choice.rep.action(choice.action2)},
                        choice.rep.alpha_v(), choice.rep.beta_v());
}

CompatiblePair document_pair(const BiHomAlgebra& algebra, std::size_t b1, std::size_t b2) {
  return CompatiblePair(BiHomAlgebra(algebra.dim(), {algebra.bracket(b1), algebra.bracket(b2)},
                                     algebra.alpha(), algebra.beta()));
}

void run_check(const InputDocument& doc, const Flags& flags, Report& report) {
  const BiHomAlgebra algebra = doc.algebra();
  std::vector<std::size_t> slots;
  if (!flags.bracket.empty()) {
    slots.push_back(doc.bracket_index(flags.bracket));
  } else {
    for (std::size_t i = 0; i < doc.brackets.size(); ++i) slots.push_back(i);
  }
  for (std::size_t slot : slots) {
    const std::string& name = doc.brackets[slot].name;
    const AxiomReport lie = check_bihom_lie(algebra, slot);
    const AxiomReport mult = check_multiplicative(algebra, slot);
    report.line().add("bracket", name);
    report.record_check("twist-commute", "structure-maps-commute", lie.commute_ok);
    report.record_check("skew", "twisted-skew-symmetry", lie.skew_ok);
    report.record_check("jacobi", "twisted-jacobi", lie.jacobi_ok);
    report.record_check("multiplicative", "structure-maps-are-bracket-morphisms",
                        mult.multiplicative_ok);
    report.record_violations(lie.violations);
    report.record_violations(mult.violations);

    if (!flags.rep.empty()) {
      ModuleChoice choice = resolve_module(doc, algebra, flags, slot, slot, false);
      const AxiomReport mod = check_representation(algebra, choice.rep, slot, choice.action1);
      report.record_check("module", "module-axioms", mod.representation_ok);
      report.record_violations(mod.violations);
    }
  }
}

void run_compat(const InputDocument& doc, const Flags& flags, Report& report) {
  const BiHomAlgebra algebra = doc.algebra();
  const std::size_t b1 = bracket_slot(doc, flags.bracket, 0);
  const std::size_t b2 = bracket_slot(doc, flags.bracket2, 1);
  const CompatiblePair pair = document_pair(algebra, b1, b2);
  report.line()
      .add("bracket1", doc.brackets[b1].name)
      .add("bracket2", doc.brackets[b2].name);

  const AxiomReport rep = check_compatible_pair(pair);
  report.record_check("skew", "twisted-skew-symmetry", rep.skew_ok);
  report.record_check("jacobi", "twisted-jacobi", rep.jacobi_ok);
  report.record_check("compatibility", "mixed-six-term-jacobi", rep.compatible_ok);
  report.record_violations(rep.violations);

  bool mc_available = true;
  bool mc_ok = false;
  try {
    const Differential z = Differential::zero();
    mc_ok = mc_pair_check(
        {bracket_cochain(pair.algebra(), 0), bracket_cochain(pair.algebra(), 1)}, z, z,
        pair.algebra());
  } catch (const std::domain_error&) {
    mc_available = false;
  }
  if (mc_available) {
    report.record_check("maurer-cartan-pair", "graded-squares-and-cross-bracket-vanish", mc_ok);
    report.record_check("verdict-agreement", "compatibility-matches-maurer-cartan",
                        mc_ok == rep.all_ok());
  } else {
    report.line().add("check", "maurer-cartan-pair").add("skipped",
                                                         "bracket-not-intertwining");
  }

  if (flags.has_seed) {
    const McEquivalenceStats stats = mc_equivalence_property(flags.seed, flags.trials);
    ReportLine& line = report.line();
    line.add("property", "maurer-cartan-equivalence")
        .add("seed", std::to_string(flags.seed))
        .add("trials", stats.trials)
        .add("agreements", stats.agreements)
        .add("compatible-samples", stats.compatible_count)
        .add("ok", stats.agreements == stats.trials);
    if (stats.agreements != stats.trials) report.fail();
  }
}

void run_cohomology(const InputDocument& doc, const Flags& flags, Report& report) {
  const BiHomAlgebra algebra = doc.algebra();
  const std::size_t slot = bracket_slot(doc, flags.bracket, 0);
  ModuleChoice choice = resolve_module(doc, algebra, flags, slot, slot, false);
  report.line()
      .add("bracket", doc.brackets[slot].name)
      .add("rep", choice.name);
  for (std::size_t n = flags.deg_lo; n <= flags.deg_hi; ++n) {
    const std::size_t h = cohomology_dim(algebra, choice.rep, n, slot, choice.action1);
    report.line().add("degree", n).add("dim", h);
  }
}

void run_ccohomology(const InputDocument& doc, const Flags& flags, Report& report) {
  const BiHomAlgebra algebra = doc.algebra();
  const std::size_t b1 = bracket_slot(doc, flags.bracket, 0);
  const std::size_t b2 = bracket_slot(doc, flags.bracket2, 1);
  const CompatiblePair pair = document_pair(algebra, b1, b2);
  ModuleChoice choice = resolve_module(doc, pair.algebra(), flags, 0, 1, true);
  const Representation module = ordered_pair_module(choice);
  report.line()
      .add("bracket1", doc.brackets[b1].name)
      .add("bracket2", doc.brackets[b2].name)
      .add("rep", choice.name);
  for (std::size_t n = flags.deg_lo; n <= flags.deg_hi; ++n) {
    const std::size_t h = compatible_cohomology_dim(pair, module, n);
    report.line().add("degree", n).add("dim", h);
  }
  for (std::size_t n = flags.deg_lo; n <= flags.deg_hi; ++n) {
    const bool ok = anticommute_check(pair, module, n);
    report.line()
        .add("check", "anticommute")
        .add("degree", n)
        .add("law", "mixed-coboundaries-anticommute")
        .add("ok", ok);
    if (!ok) report.fail();
  }
}

Outcome run_twist(const InputDocument& doc, const Flags& flags) {
  if (flags.op1.empty()) {
    throw std::runtime_error("twist needs --operator (and optionally --operator2)");
  }
  const OperatorSpec& first = doc.op(flags.op1);
  const OperatorSpec& second = flags.op2.empty() ? first : doc.op(flags.op2);
  const BiHomAlgebra twisted = yau_twist(doc.algebra(), first.matrix, second.matrix);

  InputDocument out;
  out.dim = doc.dim;
  out.alpha = twisted.alpha();
  out.beta = twisted.beta();
  for (std::size_t i = 0; i < doc.brackets.size(); ++i) {
    out.brackets.push_back({doc.brackets[i].name, twisted.bracket(i)});
  }
  return {serialize(out), 0};
}

void run_nijenhuis(const InputDocument& doc, const Flags& flags, Report& report) {
  if (flags.op1.empty()) throw std::runtime_error("nijenhuis needs --operator");
  const BiHomAlgebra algebra = doc.algebra();
  const std::size_t slot = bracket_slot(doc, flags.bracket, 0);
  const OperatorSpec& spec = doc.op(flags.op1);
  report.line().add("operator", spec.name).add("bracket", doc.brackets[slot].name);

  const bool commutes = spec.matrix * algebra.alpha() == algebra.alpha() * spec.matrix &&
                        spec.matrix * algebra.beta() == algebra.beta() * spec.matrix;
  report.record_check("twist-commuting", "operator-commutes-with-structure-maps", commutes);
  if (!commutes) return;

  const bool nij = nijenhuis_check(algebra, spec.matrix, slot);
  report.record_check("nijenhuis", "nijenhuis-identity", nij);
  if (!nij) return;

  const CompatiblePair pair = nijenhuis_deform(algebra, spec.matrix, slot);
  report.record_check("deformed-pair", "mixed-six-term-jacobi",
                      check_compatible_pair(pair).all_ok());
  detail::for_each_increasing(algebra.dim(), 2, [&](const std::vector<std::size_t>& t) {
    const Vec value = pair.second().on_basis(t[0], t[1]);
    if (!is_zero_vec(value)) {
      report.line().add("deformed", format_indices(t)).add("value", format_vec(value));
    }
  });
}

void describe_rb_operator(const BiHomAlgebra& algebra, std::size_t slot,
                          const OperatorSpec& spec, const OperatorSpec& attrs, Report& report,
                          bool& ok) {
  report.line()
      .add("operator", spec.name)
      .add("s", attrs.s)
      .add("l", attrs.l)
      .add("lambda", rational_to_string(attrs.lambda));
  const bool commutes = spec.matrix * algebra.alpha() == algebra.alpha() * spec.matrix &&
                        spec.matrix * algebra.beta() == algebra.beta() * spec.matrix;
  report.record_check("twist-commuting", "operator-commutes-with-structure-maps", commutes);
  if (!commutes) {
    ok = false;
    return;
  }
  const bool rb = rb_check(algebra, spec.matrix, attrs.s, attrs.l, attrs.lambda, slot);
  report.record_check("rota-baxter", "twisted-rota-baxter-identity", rb);
  if (!rb) {
    ok = false;
    return;
  }
  const Tensor3 induced = rb_induced_bracket(algebra, spec.matrix, attrs.s, attrs.l,
                                             attrs.lambda, slot);
  const BiHomAlgebra induced_algebra(algebra.dim(), {induced}, algebra.alpha(), algebra.beta());
  report.record_check("induced-bracket", "bihom-lie", check_bihom_lie(induced_algebra).all_ok());
}

void run_rota_baxter(const InputDocument& doc, const Flags& flags, Report& report) {
  if (flags.op1.empty()) throw std::runtime_error("rota-baxter needs --operator");
  const BiHomAlgebra algebra = doc.algebra();
  const std::size_t slot = bracket_slot(doc, flags.bracket, 0);
  const OperatorSpec& first = doc.op(flags.op1);

  bool first_ok = true;
  describe_rb_operator(algebra, slot, first, first, report, first_ok);
  if (flags.op2.empty()) return;

  const OperatorSpec& second = doc.op(flags.op2);
  if (second.s != first.s || second.l != first.l || second.lambda != first.lambda) {
    throw std::runtime_error("paired operators must carry the same s, l and lambda");
  }
  bool second_ok = true;
  describe_rb_operator(algebra, slot, second, first, report, second_ok);
  if (!first_ok || !second_ok) return;

  const bool cross = rb_compatible_check(algebra, first.matrix, second.matrix, first.s, first.l,
                                         first.lambda, slot);
  report.record_check("operator-compatibility", "mixed-rota-baxter-identity", cross);
  if (!cross) return;
  const CompatiblePair pair = rb_compatible_pair(algebra, first.matrix, second.matrix, first.s,
                                                 first.l, first.lambda, slot);
  report.record_check("induced-pair", "mixed-six-term-jacobi",
                      check_compatible_pair(pair).all_ok());
}

void run_mc(const InputDocument& doc, const Flags& flags, Report& report) {
  const BiHomAlgebra algebra = doc.algebra();
  const std::size_t slot = bracket_slot(doc, flags.bracket, 0);
  report.line().add("bracket", doc.brackets[slot].name);
  const bool ok = mc_check(algebra, slot);
  report.record_check("maurer-cartan", "graded-square-vanishes", ok);
  if (ok) return;

  const Cochain mu = bracket_cochain(algebra, slot);
  const Cochain square = nr_bracket(mu, mu, algebra);
  bool found = false;
  detail::for_each_increasing(algebra.dim(), 3, [&](const std::vector<std::size_t>& t) {
    if (found) return;
    const Vec value = square.value_vec(t);
    if (!is_zero_vec(value)) {
      report.line().add("witness", format_indices(t)).add("value", format_vec(value));
      found = true;
    }
  });
}

void run_chainmap(const InputDocument& doc, const Flags& flags, Report& report) {
  const BiHomAlgebra algebra = doc.algebra();
  const std::size_t b1 = bracket_slot(doc, flags.bracket, 0);
  const std::size_t b2 = bracket_slot(doc, flags.bracket2, 1);
  const CompatiblePair pair = document_pair(algebra, b1, b2);
  ModuleChoice choice = resolve_module(doc, pair.algebra(), flags, 0, 1, true);
  const Representation module = ordered_pair_module(choice);
  report.line()
      .add("bracket1", doc.brackets[b1].name)
      .add("bracket2", doc.brackets[b2].name)
      .add("rep", choice.name);
  for (std::size_t n = flags.deg_lo; n <= flags.deg_hi; ++n) {
    const bool ok = chain_map_check(pair, module, n);
    report.line()
        .add("check", "chain-map")
        .add("degree", n)
        .add("law", "comparison-map-intertwines-coboundaries")
        .add("ok", ok);
    if (!ok) report.fail();
  }
}

}  // namespace

Outcome run_command(const InputDocument& doc, const std::string& command, const Flags& flags) {
  if (command == "twist") return run_twist(doc, flags);

  Report report(command);
  if (command == "check") {
    run_check(doc, flags, report);
  } else if (command == "compat") {
    run_compat(doc, flags, report);
  } else if (command == "cohomology") {
    run_cohomology(doc, flags, report);
  } else if (command == "ccohomology") {
    run_ccohomology(doc, flags, report);
  } else if (command == "nijenhuis") {
    run_nijenhuis(doc, flags, report);
  } else if (command == "rota-baxter") {
    run_rota_baxter(doc, flags, report);
  } else if (command == "mc") {
    run_mc(doc, flags, report);
  } else if (command == "chainmap") {
    run_chainmap(doc, flags, report);
  } else {
    throw std::runtime_error("unknown command \"" + command + "\"");
  }
  return {report.render(flags.machine), report.exit_code()};
}

}  // namespace bihom
