#pragma once

#include <stdexcept>
#include <string>

namespace pfgeom {

/// Failure categories surfaced by the library. The CLI maps them to exit
/// codes: ConfigError -> 1, everything numerical -> 2.
enum class ErrorKind {
  ConfigError,
  ZeroForm,
  NullNormal,
  DegreeError,
  DegenerateTangentMetric,
  SingularMetric,
  DegenerateCurve,
  NumericalBlowup,
  SampleMismatch,
  IoError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        detail_(message) {}

  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace pfgeom
