#include "uom/error.hpp"

namespace uom {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidInvolution: return "InvalidInvolution";
    case Errc::DanglingOrigin: return "DanglingOrigin";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InvolutionMismatch: return "InvolutionMismatch";
    case Errc::OriginMismatch: return "OriginMismatch";
    case Errc::MapShape: return "MapShape";
    case Errc::CollapsedEdge: return "CollapsedEdge";
    case Errc::WalkMismatch: return "WalkMismatch";
    case Errc::TargetMismatch: return "TargetMismatch";
    case Errc::SizeGuard: return "SizeGuard";
    case Errc::NonPositiveN: return "NonPositiveN";
    case Errc::DisconnectedSource: return "DisconnectedSource";
    case Errc::DisconnectedGraph: return "DisconnectedGraph";
    case Errc::InfiniteIndex: return "InfiniteIndex";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::InvalidAction: return "InvalidAction";
    case Errc::OrderCap: return "OrderCap";
    case Errc::EvenN: return "EvenN";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::StartNotOverWalk: return "StartNotOverWalk";
    case Errc::EndpointNotOverWalk: return "EndpointNotOverWalk";
    case Errc::InvalidWalk: return "InvalidWalk";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownName: return "UnknownName";
    case Errc::ValidationFailure: return "ValidationFailure";
    case Errc::NonPositive: return "NonPositive";
    case Errc::HypothesisViolation: return "HypothesisViolation";
  }
  return "Unknown";
}

}  // namespace uom
