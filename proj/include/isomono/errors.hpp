#pragma once

#include <stdexcept>
#include <string>

namespace isomono {

enum class ErrorKind {
  SingularSystem,
  InconsistentSystem,
  UnknownFamily,
  BadKatz,
  NotAffineInP,
  NotCyclic,
  ZeroWedge,
  DegenerateSample,
  MultipleZeros,
  DomainViolation,
  NotIsolated,
  NotADE,
  EliminationInconclusive,
  StepUnderflow,
  PathTooClose,
  UsageError,
  ParseError,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::InconsistentSystem: return "InconsistentSystem";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::BadKatz: return "BadKatz";
    case ErrorKind::NotAffineInP: return "NotAffineInP";
    case ErrorKind::NotCyclic: return "NotCyclic";
    case ErrorKind::ZeroWedge: return "ZeroWedge";
    case ErrorKind::DegenerateSample: return "DegenerateSample";
    case ErrorKind::MultipleZeros: return "MultipleZeros";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::NotIsolated: return "NotIsolated";
    case ErrorKind::NotADE: return "NotADE";
    case ErrorKind::EliminationInconclusive: return "EliminationInconclusive";
    case ErrorKind::StepUnderflow: return "StepUnderflow";
    case ErrorKind::PathTooClose: return "PathTooClose";
    case ErrorKind::UsageError: return "UsageError";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

}  // namespace isomono
