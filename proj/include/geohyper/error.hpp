#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace geohyper {

enum class Errc {
  SharedEndpoint,
  NoIntersection,
  ParallelOverlap,
  DegenerateTriangle,
  TieBreak,
  GeneralPositionViolation,
  GenerationFailed,
  InvalidHypergraph,
  UniformityMismatch,
  NotConvexPosition,
  VerticalLine,
  PointNotOnArrangement,
  NotPairwiseCrossing,
  ParallelLines,
  PreconditionUnmet,
  CaseFallthrough,
  IntervalDisconnected,
  HellyEmpty,
  NoSeparatingRed,
  SharedVertex,
  BudgetExceeded,
  ParseError,
  IoError,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::SharedEndpoint: return "SharedEndpoint";
    case Errc::NoIntersection: return "NoIntersection";
    case Errc::ParallelOverlap: return "ParallelOverlap";
    case Errc::DegenerateTriangle: return "DegenerateTriangle";
    case Errc::TieBreak: return "TieBreak";
    case Errc::GeneralPositionViolation: return "GeneralPositionViolation";
    case Errc::GenerationFailed: return "GenerationFailed";
    case Errc::InvalidHypergraph: return "InvalidHypergraph";
    case Errc::UniformityMismatch: return "UniformityMismatch";
    case Errc::NotConvexPosition: return "NotConvexPosition";
    case Errc::VerticalLine: return "VerticalLine";
    case Errc::PointNotOnArrangement: return "PointNotOnArrangement";
    case Errc::NotPairwiseCrossing: return "NotPairwiseCrossing";
    case Errc::ParallelLines: return "ParallelLines";
    case Errc::PreconditionUnmet: return "PreconditionUnmet";
    case Errc::CaseFallthrough: return "CaseFallthrough";
    case Errc::IntervalDisconnected: return "IntervalDisconnected";
    case Errc::HellyEmpty: return "HellyEmpty";
    case Errc::NoSeparatingRed: return "NoSeparatingRed";
    case Errc::SharedVertex: return "SharedVertex";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

/// Exception carrying a machine-readable error kind. All library failures
/// surface as this type.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace geohyper
