#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kgbs {

// Malformed input file; carries the 1-based line number where parsing failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, std::uint64_t line, const std::string& what)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + what),
        line_(line) {}
  std::uint64_t line() const noexcept { return line_; }

 private:
  std::uint64_t line_;
};

// Structurally invalid data (unknown node id, duplicate label, ...).
class ValidationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation requires state the object does not have (e.g. ground-truth labels).
class StateError : public std::logic_error {
  using std::logic_error::logic_error;
};

// The query budget cannot cover another uncached oracle query.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(std::uint64_t spent, std::uint64_t limit)
      : std::runtime_error("query budget exhausted: spent " + std::to_string(spent) +
                           " of " + std::to_string(limit)),
        spent_(spent), limit_(limit) {}
  std::uint64_t spent() const noexcept { return spent_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t spent_;
  std::uint64_t limit_;
};

// Optimization produced NaN loss or a rising loss window; carries the step index.
class TrainingDivergence : public std::runtime_error {
 public:
  TrainingDivergence(const std::string& what, std::uint64_t step)
      : std::runtime_error(what + " (at step " + std::to_string(step) + ")"),
        step_(step) {}
  std::uint64_t step() const noexcept { return step_; }

 private:
  std::uint64_t step_;
};

}  // namespace kgbs
