#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ggd {

/// One failed axiom or hypothesis, with the elements that witness it.
struct Violation {
  std::string rule;
  std::string detail;
  std::vector<std::string> witnesses;

  bool operator==(const Violation&) const = default;
};

/// Result of a validator. Empty `violations` means the structure passed;
/// `notes` carry derived diagnostics that are not failures.
class Report {
 public:
  static constexpr std::size_t kPrintedPerRule = 8;

  void add(std::string rule, std::string detail,
           std::vector<std::string> witnesses = {});
  void note(std::string text);
  void merge(const Report& other, const std::string& prefix = {});

  bool ok() const noexcept { return violations_.empty(); }
  const std::vector<Violation>& violations() const noexcept {
    return violations_;
  }
  const std::vector<std::string>& notes() const noexcept { return notes_; }
  bool has_rule(const std::string& rule) const;
  std::size_t count(const std::string& rule) const;

  /// Deterministic rendering; at most kPrintedPerRule entries per rule.
  std::string str() const;

 private:
  std::vector<Violation> violations_;
  std::vector<std::string> notes_;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text that does not follow the GGD grammar, or references unknown names.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Tables that cannot even be indexed (dangling ids, duplicates, missing
/// entries). Distinct from axiom violations.
class MalformedError : public Error {
 public:
  explicit MalformedError(Report report);
  const Report& report() const noexcept { return report_; }

 private:
  Report report_;
};

/// A structure failed one of its validators.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, Report report);
  const Report& report() const noexcept { return report_; }
  /// The message without the rendered report.
  const std::string& headline() const noexcept { return headline_; }

 private:
  Report report_;
  std::string headline_;
};

/// An operation was called outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace ggd
