#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bihom/document.hpp"
#include "bihom/runner.hpp"

namespace {

// "A..B" or a single degree "A".
void parse_degrees(const std::string& text, bihom::Flags& flags) {
  const std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      flags.deg_lo = flags.deg_hi = std::stoul(text);
    } else {
      flags.deg_lo = std::stoul(text.substr(0, dots));
      flags.deg_hi = std::stoul(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--degrees", "expected A..B or a single degree");
  }
  if (flags.deg_lo > flags.deg_hi) {
    throw CLI::ValidationError("--degrees", "range is empty");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks and cohomology for twisted Lie-type brackets"};
  app.require_subcommand(1);

  bihom::Flags flags;
  std::string input_path;
  std::string degrees_text;
  std::string format = "text";

  const std::vector<std::string> commands = {"check",       "compat",      "cohomology",
                                             "ccohomology", "twist",       "nijenhuis",
                                             "rota-baxter", "mc",          "chainmap"};
  for (const std::string& name : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("input", input_path, "input document")->required();
    sub->add_option("--bracket", flags.bracket, "bracket name (default: first)");
    sub->add_option("--bracket2", flags.bracket2, "second bracket name (default: second)");
    sub->add_option("--rep", flags.rep, "representation name (default: adjoint)");
    sub->add_option("--action", flags.action, "action name inside --rep");
    sub->add_option("--action2", flags.action2, "second action name inside --rep");
    sub->add_option("--operator", flags.op1, "operator name");
    sub->add_option("--operator2", flags.op2, "second operator name");
    sub->add_option("--degrees", degrees_text, "degree range A..B (default 0..2)");
    sub->add_option("--seed", flags.seed, "seed for randomized properties")
        ->each([&flags](const std::string&) { flags.has_seed = true; });
    sub->add_option("--trials", flags.trials, "sample count for randomized properties");
    sub->add_option("--format", format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
  }

  CLI11_PARSE(app, argc, argv);

  if (!degrees_text.empty()) {
    try {
      parse_degrees(degrees_text, flags);
    } catch (const CLI::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  flags.machine = (format == "machine");

  try {
    const bihom::InputDocument doc = bihom::parse_input(input_path);
    const bihom::Outcome outcome =
        bihom::run_command(doc, app.get_subcommands().front()->get_name(), flags);
    std::cout << outcome.output;
    return outcome.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
