#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace monorec {

// Bad arguments at an API boundary: dimension mismatch, coordinate out of
// range, malformed oracle spec, bad CLI usage. CLI exit code 2.
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A requested computation exceeds an enumeration or size budget.
// CLI exit code 4.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The oracle is not monotone: unit_point <= zero_point componentwise, yet
// F(unit_point) = 1 and F(zero_point) = 0. CLI exit code 3.
class ContradictionError : public std::runtime_error {
 public:
  ContradictionError(const std::string& msg, std::vector<int> unit_point,
                     std::vector<int> zero_point)
      : std::runtime_error(msg),
        unit_point_(std::move(unit_point)),
        zero_point_(std::move(zero_point)) {}

  const std::vector<int>& unit_point() const noexcept { return unit_point_; }
  const std::vector<int>& zero_point() const noexcept { return zero_point_; }

 private:
  std::vector<int> unit_point_;
  std::vector<int> zero_point_;
};

// An internal cross-check failed, e.g. two algorithms disagree in `compare`.
// CLI exit code 5.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace monorec
