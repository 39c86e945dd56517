#include "ggd/error.hpp"

#include <algorithm>
#include <sstream>

namespace ggd {

void Report::add(std::string rule, std::string detail,
                 std::vector<std::string> witnesses) {
  violations_.push_back(
      Violation{std::move(rule), std::move(detail), std::move(witnesses)});
}

void Report::note(std::string text) { notes_.push_back(std::move(text)); }

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& v : other.violations_) {
    violations_.push_back(
        Violation{prefix + v.rule, v.detail, v.witnesses});
  }
  for (const auto& n : other.notes_) {
    notes_.push_back(prefix + n);
  }
}

bool Report::has_rule(const std::string& rule) const {
  return count(rule) > 0;
}

std::size_t Report::count(const std::string& rule) const {
  return static_cast<std::size_t>(
      std::count_if(violations_.begin(), violations_.end(),
                    [&](const Violation& v) { return v.rule == rule; }));
}

std::string Report::str() const {
  std::ostringstream out;
  std::map<std::string, std::size_t> printed;
  std::map<std::string, std::size_t> total;
  std::vector<std::string> order;
  for (const auto& v : violations_) {
    if (total[v.rule]++ == 0) {
      order.push_back(v.rule);
    }
  }
  for (const auto& v : violations_) {
    if (printed[v.rule]++ >= kPrintedPerRule) {
      continue;
    }
    out << "violation: " << v.rule << ": " << v.detail;
    if (!v.witnesses.empty()) {
      out << " [witnesses:";
      for (const auto& w : v.witnesses) {
        out << ' ' << w;
      }
      out << ']';
    }
    out << '\n';
  }
  for (const auto& rule : order) {
    if (total[rule] > kPrintedPerRule) {
      out << "violation: " << rule << ": ... "
          << (total[rule] - kPrintedPerRule) << " more\n";
    }
  }
  for (const auto& n : notes_) {
    out << "note: " << n << '\n';
  }
  return out.str();
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

MalformedError::MalformedError(Report report)
    : Error("malformed table\n" + report.str()), report_(std::move(report)) {}

ValidationError::ValidationError(const std::string& what, Report report)
    : Error(what + "\n" + report.str()),
      report_(std::move(report)),
      headline_(what) {}

}  // namespace ggd
