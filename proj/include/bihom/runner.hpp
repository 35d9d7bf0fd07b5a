#pragma once

#include <cstddef>
#include <string>

#include "bihom/document.hpp"

namespace bihom {

// Parsed command-line options shared by all commands; empty strings mean
// "use the default for this command".
struct Flags {
  std::string bracket;
  std::string bracket2;
  std::string rep;
  std::string action;
  std::string action2;
  std::string op1;
  std::string op2;
  std::size_t deg_lo = 0;
  std::size_t deg_hi = 2;
  bool has_seed = false;
  unsigned seed = 0;
  std::size_t trials = 100;
  bool machine = false;
};

struct Outcome {
  std::string output;
  int exit_code = 0;
};

// Dispatch one command against a parsed document.  Unknown commands, unknown
// names and precondition violations throw; the caller maps exceptions to
// exit code 2.
Outcome run_command(const InputDocument& doc, const std::string& command, const Flags& flags);

}  // namespace bihom
