#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tdr {

enum class ErrorKind {
  DuplicateId,
  UnknownVertexRef,
  UnknownWire,
  UnknownVertex,
  NotAPartition,
  NotASubdiagram,
  ZeroPolynomial,
  NotSquare,
  NotNilpotent,
  Singular,
  ShapeMismatch,
  SizeMismatch,
  DiagramMismatch,
  NotAMorphism,
  NotMonic,
  NotClosed,
  NotALoop,
  RestrictedDimViolation,
  NotNormalized,
  DomainMismatch,
  InvalidPartialFlow,
  NotDecomposable,
  NotConnected,
  InvalidDescriptor,
  NotDecidableWild,
  NotASimilarity,
  Unsupported,
  UnknownCommand,
  InvalidDims,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tdr
