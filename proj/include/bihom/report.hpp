#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bihom/algebra.hpp"

namespace bihom {

// One record of a report: an ordered list of key/value fields.  Values never
// contain spaces (vectors render as [a,b,...], index tuples as (i,j,...)),
// so the machine rendering is one space-separated line per record.
struct ReportLine {
  std::vector<std::pair<std::string, std::string>> fields;

  ReportLine& add(std::string key, std::string value);
  ReportLine& add(std::string key, const char* value);
  ReportLine& add(std::string key, std::size_t value);
  ReportLine& add(std::string key, bool value);  // renders yes/no
};

// The outcome of one CLI command.  exit code 0 iff nothing failed; errors
// (malformed input, unknown names) are thrown, not recorded, and exit 2.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  ReportLine& line();
  void record_check(const std::string& check, const std::string& law, bool ok);
  void record_violations(const std::vector<Violation>& violations, std::size_t max_lines = 8);
  void fail() { failed_ = true; }

  bool failed() const { return failed_; }
  int exit_code() const { return failed_ ? 1 : 0; }

  // machine: "key=value key=value" lines.  text: aligned human format.
  std::string render(bool machine) const;

 private:
  std::string command_;
  std::vector<ReportLine> lines_;
  bool failed_ = false;
};

std::string format_vec(const Vec& v);
std::string format_indices(const std::vector<std::size_t>& idx);

}  // namespace bihom
