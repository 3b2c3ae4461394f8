#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mmdc {

/// Raised when a caller breaks a documented precondition (wrong vertex side,
/// non-free tree root, non-square assignment matrix, malformed path).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Instance failed validate_instance and cannot be expanded.
class RejectedInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solution refers to pairs outside the instance.
class MalformedSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The alternating tree exhausted every reachable Y-vertex while its root
/// still had residual capacity. `hall_violator` lists the X-side tree (as
/// printable vertex names) whose residual demand cannot be supplied.
class InfeasibleInstance : public std::runtime_error {
 public:
  InfeasibleInstance(std::string root, std::vector<std::string> hall_violator)
      : std::runtime_error(describe(root, hall_violator)),
        root_(std::move(root)),
        hall_violator_(std::move(hall_violator)) {}

  const std::string& root() const noexcept { return root_; }
  const std::vector<std::string>& hall_violator() const noexcept { return hall_violator_; }

 private:
  static std::string describe(const std::string& root, const std::vector<std::string>& s) {
    std::string msg = "infeasible instance: root " + root + " cannot be saturated; Hall violator S={";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) msg += ",";
      msg += s[i];
    }
    return msg + "}";
  }

  std::string root_;
  std::vector<std::string> hall_violator_;
};

/// Text input did not follow the instance/solution format.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// An exhaustive oracle hit its state budget. This is a refusal, not an answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mmdc
