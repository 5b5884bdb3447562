#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pinilot {

enum class ErrorKind {
  ClosureExceedsBound,
  MalformedPermutation,
  NotAnElement,
  NotNormal,
  WrongParent,
  NotAnAutomorphism,
  NotAHomomorphism,
  LatticeBudgetExceeded,
  JoinPredicateFailure,
  BadPrime,
  BadCondition,
  UnknownCorollary,
  UnknownLemma,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class GroupError : public std::runtime_error {
public:
  GroupError(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace pinilot
