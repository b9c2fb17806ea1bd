#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace btlab {

enum class ErrorKind {
  InvalidInput,
  RankDeficient,
  NotCommensurable,
  DimensionOutOfRange,
  PrecisionOverflow,
  ResourceBudgetExceeded,
  BoundaryVertex,
  NotAPrint,
  AmbiguousPrint,
  OutOfBall,
  InvalidTypeSet,
  InexactMetric,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace btlab
