#pragma once

#include <stdexcept>
#include <string>

namespace adgibbs {

enum class ErrorKind {
  SumNotOne,
  EntryBelowEpsilon,
  BadEpsilon,
  DimensionMismatch,
  LengthMismatch,
  NotNormalized,
  BadMass,
  BadExponent,
  NoFeasibleExponent,
  MissingConditionalSampler,
  NonFiniteLogDensity,
  AdaptationLeftY,
  BadCoord,
  NotAMeasure,
  StateOutsideTruncation,
  TruncationTooSmall,
  ScaleOutOfRange,
  BadArgument,
  IoError,
};

/// Library-wide exception carrying a machine-readable kind tag.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace adgibbs
