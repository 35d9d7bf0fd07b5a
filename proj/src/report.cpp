#include "bihom/report.hpp"

#include <sstream>

#include "bihom/rational.hpp"

namespace bihom {

std::string format_vec(const Vec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += rational_to_string(v[i]);
  }
  return out + "]";
}

std::string format_indices(const std::vector<std::size_t>& idx) {
  std::string out = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(idx[i] + 1);  // basis elements are 1-based for humans
  }
  return out + ")";
}

ReportLine& ReportLine::add(std::string key, std::string value) {
  fields.emplace_back(std::move(key), std::move(value));
  return *this;
}

ReportLine& ReportLine::add(std::string key, const char* value) {
  return add(std::move(key), std::string(value));
}

ReportLine& ReportLine::add(std::string key, std::size_t value) {
  return add(std::move(key), std::to_string(value));
}

ReportLine& ReportLine::add(std::string key, bool value) {
  return add(std::move(key), std::string(value ? "yes" : "no"));
}

ReportLine& Report::line() {
  lines_.emplace_back();
  return lines_.back();
}

void Report::record_check(const std::string& check, const std::string& law, bool ok) {
  line().add("check", check).add("law", law).add("ok", ok);
  if (!ok) failed_ = true;
}

void Report::record_violations(const std::vector<Violation>& violations, std::size_t max_lines) {
  for (std::size_t i = 0; i < violations.size() && i < max_lines; ++i) {
    const Violation& v = violations[i];
    line()
        .add("violation", v.axiom)
        .add("at", format_indices(v.indices))
        .add("lhs", format_vec(v.lhs))
        .add("rhs", format_vec(v.rhs));
  }
  if (violations.size() > max_lines) {
    line().add("violations-omitted", violations.size() - max_lines);
  }
}

std::string Report::render(bool machine) const {
  std::ostringstream out;
  if (machine) {
    out << "command=" << command_ << "\n";
    for (const ReportLine& l : lines_) {
      bool first = true;
      for (const auto& [key, value] : l.fields) {
        if (!first) out << " ";
        out << key << "=" << value;
        first = false;
      }
      out << "\n";
    }
    out << "verdict=" << (failed_ ? "fail" : "pass") << "\n";
    return out.str();
  }

  out << "== " << command_ << " ==\n";
  for (const ReportLine& l : lines_) {
    out << " ";
    for (const auto& [key, value] : l.fields) {
      out << " " << key << ": " << value;
    }
    out << "\n";
  }
  out << (failed_ ? "FAIL" : "PASS") << "\n";
  return out.str();
}

}  // namespace bihom
