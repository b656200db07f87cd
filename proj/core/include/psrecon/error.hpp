#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace psrecon {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  SizeMismatch,
  NonConstantWeight,
  SymmetryViolation,
  NegativeBC,
  NotAMaximalInterval,
  GreedyInfeasible,
  UnpairableProfile,
  OverBudget,
};

const char* to_string(ErrorCode code) noexcept;

/// A (length, weight) coordinate on the reconstruction grid.
struct GridPoint {
  int l = 0;
  int w = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Every failure raised by the library carries a code and, where the
/// failure is tied to a grid coordinate, the offending (l, w).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<GridPoint> where = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::optional<GridPoint>& where() const noexcept { return where_; }

 private:
  ErrorCode code_;
  std::optional<GridPoint> where_;
};

}  // namespace psrecon
