#pragma once

#include <stdexcept>
#include <string>

namespace spl {

enum class ErrorKind {
  InvalidInput,
  ParseError,
  VertexOutOfRange,
  DuplicateEdge,
  SelfLoop,
  NonPositiveWeight,
  Disconnected,
  DisconnectedComponent,
  EmptyComponent,
  CapExceeded,
  NotAClosedWalk,
  ConvergenceFailure,
  AllZeroVector,
  CourantViolation,
  ZeroAlpha,
  DegenerateBlock,
  WrongNodalPartition,
  DegenerateEigenvector,
  NoConvergence,
  LeftPositiveOrthant,
  CertificateFailure,
  DegenerateHessian,
  RetractionFailure,
  DegenerateSegment,
  ClassificationAmbiguous,
  NotInClass,
  MismatchAt,
  SuiteFailed,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace spl
