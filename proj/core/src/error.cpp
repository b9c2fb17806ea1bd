#include "btlab/error.hpp"

namespace btlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NotCommensurable: return "NotCommensurable";
    case ErrorKind::DimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorKind::PrecisionOverflow: return "PrecisionOverflow";
    case ErrorKind::ResourceBudgetExceeded: return "ResourceBudgetExceeded";
    case ErrorKind::BoundaryVertex: return "BoundaryVertex";
    case ErrorKind::NotAPrint: return "NotAPrint";
    case ErrorKind::AmbiguousPrint: return "AmbiguousPrint";
    case ErrorKind::OutOfBall: return "OutOfBall";
    case ErrorKind::InvalidTypeSet: return "InvalidTypeSet";
    case ErrorKind::InexactMetric: return "InexactMetric";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace btlab
