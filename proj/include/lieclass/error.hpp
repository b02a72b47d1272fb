#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lieclass {

/// Domain error carrying a stable error name (e.g. "InvalidRank") that the
/// CLI reports verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

namespace errors {
inline constexpr const char* kInvalidRank = "InvalidRank";
inline constexpr const char* kEmptyMarking = "EmptyMarking";
inline constexpr const char* kNodeOutOfRange = "NodeOutOfRange";
inline constexpr const char* kNotMaximalParabolic = "NotMaximalParabolic";
inline constexpr const char* kArityMismatch = "ArityMismatch";
inline constexpr const char* kNonDominantWeight = "NonDominantWeight";
inline constexpr const char* kUnsupportedWeight = "UnsupportedWeight";
inline constexpr const char* kZeroClass = "ZeroClass";
inline constexpr const char* kInvalidGroup = "InvalidGroup";
inline constexpr const char* kInvalidDimension = "InvalidDimension";
inline constexpr const char* kUnknownVariety = "UnknownVariety";
inline constexpr const char* kParameterViolation = "ParameterViolation";
inline constexpr const char* kDatabaseParse = "DatabaseParseError";
}  // namespace errors

}  // namespace lieclass
