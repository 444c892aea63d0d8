#pragma once

#include <stdexcept>
#include <string>

namespace aoi {

/// Parameter outside its mathematical domain (negative variance, c > c_max, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Vector lengths inconsistent with N (y must hold N+1 entries, c must hold N).
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// No schedule satisfies the constraints of the instance.
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A distortion budget below the smallest distortion the curve can reach.
class InfeasibleDistortion : public Infeasible {
 public:
  using Infeasible::Infeasible;
};

/// Schedule with a negative request gap; it cannot be played out in time.
class InfeasibleSchedule : public Infeasible {
 public:
  using Infeasible::Infeasible;
};

/// Iterative oracle ran out of its iteration budget.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closed-form branch produced output violating its own premise.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace aoi
