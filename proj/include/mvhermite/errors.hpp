#pragma once

#include <stdexcept>
#include <string>

namespace mvh {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotNilpotent : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DivergentSeries : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PoleInDenominator : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidParameters : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularMomentMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonPolynomialResult : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnderResolved : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EigenFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StepRejected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mvh
