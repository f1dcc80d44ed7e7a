#pragma once

#include <stdexcept>
#include <string>

namespace ellislab {

/// Error categories raised by the library. The CLI maps these to exit codes
/// (input errors -> 1, resource caps -> 2, broken internal invariants -> 3).
enum class ErrorKind {
  IllegalPoint,
  RationalCut,
  NoArrow,
  EmptySigma,
  CarrierMismatch,
  CapExceeded,
  NotPartialMapMonoid,
  NotAnIdeal,
  SpaceMismatch,
  IllegalObservation,
  NotElementary,
  Inconsistent,
  UnwitnessableTarget,
  NotMonotonePairs,
  PreconditionViolated,
  ParseError,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::IllegalPoint: return "IllegalPoint";
    case ErrorKind::RationalCut: return "RationalCut";
    case ErrorKind::NoArrow: return "NoArrow";
    case ErrorKind::EmptySigma: return "EmptySigma";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotPartialMapMonoid: return "NotPartialMapMonoid";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::IllegalObservation: return "IllegalObservation";
    case ErrorKind::NotElementary: return "NotElementary";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::UnwitnessableTarget: return "UnwitnessableTarget";
    case ErrorKind::NotMonotonePairs: return "NotMonotonePairs";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace ellislab
