#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eurep {

/// Every failure the library reports names the invariant that did not hold.
enum class ErrorCode {
  NegativeWeight,
  SumNotOne,
  LengthMismatch,
  AlphaOutOfRange,
  SpaceMismatch,
  NotInSimplex,
  EmptyInput,
  DimensionMismatch,
  RankDeficient,
  WrongCount,
  NoSolveCapability,
  PreconditionViolated,
  InconsistentStrictPair,
  NotInAffineHull,
  UnorientedRepresentation,
  ParseError,
  InvalidScenario,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace eurep
