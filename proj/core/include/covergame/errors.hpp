#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace covergame {

/// Base class for all errors raised by this library. `name()` is the stable
/// machine-readable identifier rendered in CLI diagnostics ("Name: message").
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define COVERGAME_DEFINE_ERROR(type, name)                    \
  struct type : Error {                                       \
    explicit type(const std::string& message)                 \
        : Error(name, message) {}                             \
  }

COVERGAME_DEFINE_ERROR(InvalidPermutationError, "InvalidPermutation");
COVERGAME_DEFINE_ERROR(InvalidCodeError, "InvalidCode");
COVERGAME_DEFINE_ERROR(NTooLargeError, "NTooLarge");
COVERGAME_DEFINE_ERROR(DuplicateValuesError, "DuplicateValues");
COVERGAME_DEFINE_ERROR(NonFiniteInputError, "NonFiniteInput");
COVERGAME_DEFINE_ERROR(TooFewValuesError, "TooFewValues");
COVERGAME_DEFINE_ERROR(DimensionMismatchError, "DimensionMismatch");
COVERGAME_DEFINE_ERROR(UnknownStrategyError, "UnknownStrategy");
COVERGAME_DEFINE_ERROR(InvalidDistributionError, "InvalidDistribution");
COVERGAME_DEFINE_ERROR(BoundaryPointError, "BoundaryPoint");
COVERGAME_DEFINE_ERROR(NotDescendingError, "NotDescending");
COVERGAME_DEFINE_ERROR(InfeasibleGapError, "InfeasibleGap");
COVERGAME_DEFINE_ERROR(InvalidConfigError, "InvalidConfig");
COVERGAME_DEFINE_ERROR(RegionViolationError, "RegionViolation");
COVERGAME_DEFINE_ERROR(MissingAssignmentError, "MissingAssignment");
COVERGAME_DEFINE_ERROR(InvalidParameterError, "InvalidParameter");
COVERGAME_DEFINE_ERROR(BaselineViolationError, "BaselineViolation");

#undef COVERGAME_DEFINE_ERROR

}  // namespace covergame
