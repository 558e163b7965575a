#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skelsnub {

enum class ErrorCode {
  UnknownPolyhedron,
  GroupTooLarge,
  CenterPoint,
  InconsistentFixedPoint,
  DegenerateCollapse,
  MultiCoverage,
  TypeConflict,
  DegenerateFace,
  NonCyclicVertexFigure,
  DegeneratePolygon,
  NotQuadrilateral,
  NotVertexTransitive,
  MarkingInconsistent,
  NoSuchSymmetry,
  NonUnique,
  StabilizerMismatch,
  PreconditionViolated,
  BadInput,
};

inline std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::UnknownPolyhedron: return "UnknownPolyhedron";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::CenterPoint: return "CenterPoint";
    case ErrorCode::InconsistentFixedPoint: return "InconsistentFixedPoint";
    case ErrorCode::DegenerateCollapse: return "DegenerateCollapse";
    case ErrorCode::MultiCoverage: return "MultiCoverage";
    case ErrorCode::TypeConflict: return "TypeConflict";
    case ErrorCode::DegenerateFace: return "DegenerateFace";
    case ErrorCode::NonCyclicVertexFigure: return "NonCyclicVertexFigure";
    case ErrorCode::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorCode::NotQuadrilateral: return "NotQuadrilateral";
    case ErrorCode::NotVertexTransitive: return "NotVertexTransitive";
    case ErrorCode::MarkingInconsistent: return "MarkingInconsistent";
    case ErrorCode::NoSuchSymmetry: return "NoSuchSymmetry";
    case ErrorCode::NonUnique: return "NonUnique";
    case ErrorCode::StabilizerMismatch: return "StabilizerMismatch";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace skelsnub
