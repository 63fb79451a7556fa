#include "tdr/error.hpp"

namespace tdr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::UnknownVertexRef: return "UnknownVertexRef";
    case ErrorKind::UnknownWire: return "UnknownWire";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::NotASubdiagram: return "NotASubdiagram";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::DiagramMismatch: return "DiagramMismatch";
    case ErrorKind::NotAMorphism: return "NotAMorphism";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotALoop: return "NotALoop";
    case ErrorKind::RestrictedDimViolation: return "RestrictedDimViolation";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::InvalidPartialFlow: return "InvalidPartialFlow";
    case ErrorKind::NotDecomposable: return "NotDecomposable";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorKind::NotDecidableWild: return "NotDecidableWild";
    case ErrorKind::NotASimilarity: return "NotASimilarity";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
    case ErrorKind::InvalidDims: return "InvalidDims";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace tdr
