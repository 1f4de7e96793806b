#pragma once

#include <stdexcept>
#include <string>

namespace ergo {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Battery state of charge would leave (0, 1] during propagation.
class DepletedError final : public Error {
 public:
  using Error::Error;
};

// Parameter identification failed to improve on the initial guess.
class FitDivergedError final : public Error {
 public:
  using Error::Error;
};

// No active subset satisfies the battery feasibility rule.
class NoFeasibleAgentError final : public Error {
 public:
  using Error::Error;
};

// No feasible subset reached the ergodicity bound within the budget.
class ErgodicityUnreachableError final : public Error {
 public:
  using Error::Error;
};

// The mission cannot keep at least one agent exploring at some horizon.
class ContinuityBrokenError final : public Error {
 public:
  using Error::Error;
};

// Scenario file failed schema validation; message names the offending key.
class ScenarioError final : public Error {
 public:
  using Error::Error;
};

}  // namespace ergo
