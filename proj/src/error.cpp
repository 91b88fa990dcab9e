#include "pfgeom/error.hpp"

namespace pfgeom {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConfigError:
      return "ConfigError";
    case ErrorKind::ZeroForm:
      return "ZeroForm";
    case ErrorKind::NullNormal:
      return "NullNormal";
    case ErrorKind::DegreeError:
      return "DegreeError";
    case ErrorKind::DegenerateTangentMetric:
      return "DegenerateTangentMetric";
    case ErrorKind::SingularMetric:
      return "SingularMetric";
    case ErrorKind::DegenerateCurve:
      return "DegenerateCurve";
    case ErrorKind::NumericalBlowup:
      return "NumericalBlowup";
    case ErrorKind::SampleMismatch:
      return "SampleMismatch";
    case ErrorKind::IoError:
      return "IoError";
  }
  return "Error";
}

}  // namespace pfgeom
