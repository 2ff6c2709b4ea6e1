#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pfas {

// Compact number text for messages ("0", "1.2", "nan").
std::string number_text(double v);

// Base error for the model library.
class PfasError : public std::runtime_error {
 public:
  explicit PfasError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// A process id that neither the built-in table nor the catalog's extensions know.
class UnknownProcessError : public PfasError {
 public:
  UnknownProcessError(std::string id, std::vector<std::string> known);

  const std::string& id() const { return id_; }
  const std::vector<std::string>& known_ids() const { return known_; }

 private:
  std::string id_;
  std::vector<std::string> known_;
};

// Registering a process whose id is already taken.
class ProcessCollisionError : public PfasError {
 public:
  explicit ProcessCollisionError(const std::string& id)
      : PfasError("process '" + id + "' already exists in the catalog") {}
};

// A record field outside its allowed range (masks 0, area <= 0, yield > 1, ...).
class InvalidFieldError : public PfasError {
 public:
  explicit InvalidFieldError(std::string msg) : PfasError(std::move(msg)) {}
};

// Arithmetic preconditions of the chip-level formulas.
class DomainError : public PfasError {
 public:
  explicit DomainError(std::string msg) : PfasError(std::move(msg)) {}
};

// One broken stack rule, located by layer.
struct Violation {
  std::string layer;  // empty for stack-level rules
  std::string rule;   // stable rule id, e.g. "unknown-process"
  std::string message;
};

// Aggregated result of validate_stack: one entry per violation.
class StackValidationError : public PfasError {
 public:
  explicit StackValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Scenario-level lookups (sweep targets, SoC overheads, trend references).
class ScenarioError : public PfasError {
 public:
  ScenarioError(std::string kind, std::string msg)
      : PfasError(std::move(msg)), kind_(std::move(kind)) {}

  // "unknown-target", "missing-overhead", "missing-reference", ...
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

}  // namespace pfas
