#pragma once

#include <stdexcept>
#include <string>

namespace spectral_twins {

enum class Err {
  LoopEdge,
  NonPositiveWeight,
  DuplicateEdge,
  BadVertexId,
  NotThreeColored,
  TooManyLabels,
  NoConvergence,
  DimensionMismatch,
  SingularT,
  ZeroEntry,
  LengthMismatch,
  ZeroEigenvalue,
  AtPole,
  EdgePole,
  BadRange,
  ParseError,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::LoopEdge: return "LoopEdge";
    case Err::NonPositiveWeight: return "NonPositiveWeight";
    case Err::DuplicateEdge: return "DuplicateEdge";
    case Err::BadVertexId: return "BadVertexId";
    case Err::NotThreeColored: return "NotThreeColored";
    case Err::TooManyLabels: return "TooManyLabels";
    case Err::NoConvergence: return "NoConvergence";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::SingularT: return "SingularT";
    case Err::ZeroEntry: return "ZeroEntry";
    case Err::LengthMismatch: return "LengthMismatch";
    case Err::ZeroEigenvalue: return "ZeroEigenvalue";
    case Err::AtPole: return "AtPole";
    case Err::EdgePole: return "EdgePole";
    case Err::BadRange: return "BadRange";
    case Err::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// All validation and numerical failures carry a code; `index` names the
/// offending vertex (ZeroEntry) or edge (pole errors) when meaningful, -1 otherwise.
class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what, int index = -1)
      : std::runtime_error(what), code_(code), index_(index) {}

  Err code() const noexcept { return code_; }
  int index() const noexcept { return index_; }

 private:
  Err code_;
  int index_;
};

}  // namespace spectral_twins
