#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace uom {

enum class Errc {
  InvalidInvolution,
  DanglingOrigin,
  IndexOutOfRange,
  InvolutionMismatch,
  OriginMismatch,
  MapShape,
  CollapsedEdge,
  WalkMismatch,
  TargetMismatch,
  SizeGuard,
  NonPositiveN,
  DisconnectedSource,
  DisconnectedGraph,
  InfiniteIndex,
  RankMismatch,
  InvalidAction,
  OrderCap,
  EvenN,
  InvalidArgument,
  StartNotOverWalk,
  EndpointNotOverWalk,
  InvalidWalk,
  SyntaxError,
  UnknownName,
  ValidationFailure,
  NonPositive,
  HypothesisViolation,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Outcome of a validation routine that reports rather than throws.
struct Violation {
  Errc code;
  int dart = -1;  // first offending dart (or vertex / edge, per code), -1 if none
  std::string message;
};

}  // namespace uom
