#pragma once

#include <stdexcept>
#include <string>

namespace triod {

enum class ErrorCode {
  EmptyPattern,
  DuplicateRank,
  RankGap,
  BadBranch,
  SyntaxError,
  NotRegular,
  NoCanonicalOrdering,
  CrossCheckMismatch,
  RotationOneThird,
  EmptySubset,
  NotTransitive,
  WrongRegime,
  NotTriodTwist,
  NotCoprime,
  EquivarianceFailure,
  BoundViolated,
  Overflow,
};

const char* error_name(ErrorCode code);

class TriodError : public std::runtime_error {
 public:
  TriodError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace triod
