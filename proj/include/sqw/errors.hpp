#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sqw {

enum class ErrorKind {
  NotHermitian,
  TraceNotOne,
  NotPSD,
  NonFinite,
  OutsideValidityWindow,
  NormalizationViolated,
  PreconditionViolated,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::TraceNotOne: return "TraceNotOne";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::OutsideValidityWindow: return "OutsideValidityWindow";
    case ErrorKind::NormalizationViolated: return "NormalizationViolated";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
  }
  return "Unknown";
}

// Every library failure is reported through this type. `magnitude` carries the
// measured size of the violation (e.g. the most negative eigenvalue for NotPSD,
// |trace - 1| for TraceNotOne).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, double magnitude, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind),
        magnitude_(magnitude) {}

  ErrorKind kind() const noexcept { return kind_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  ErrorKind kind_;
  double magnitude_;
};

}  // namespace sqw
