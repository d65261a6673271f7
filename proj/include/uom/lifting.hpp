#pragma once

// Path lifting along graph maps. Paths are edge walks; a path that stops inside
// an edge has to be subdivided first.

#include <optional>
#include <vector>

#include "uom/graph.hpp"
#include "uom/morphism.hpp"

namespace uom {

struct Walk {
  int start = 0;
  std::vector<int> darts;

  /// Last vertex of the walk in g.
  int end(const Graph& g) const { return darts.empty() ? start : g.head(darts.back()); }

  friend bool operator==(const Walk&, const Walk&) = default;
};

std::optional<Violation> validate_walk(const Graph& g, const Walk& w);

/// Where a greedy lift got stuck: at `step`, the source vertex had no dart over `dart`.
struct Obstruction {
  int step = 0;
  int vertex = 0;
  int dart = 0;

  friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

struct LiftResult {
  std::optional<Walk> lift;
  std::optional<Obstruction> obstruction;

  bool ok() const noexcept { return lift.has_value(); }
};

/// Lifts w one dart at a time, always taking the smallest source dart over the
/// next target dart. Never gets stuck when m is open. Throws StartNotOverWalk.
LiftResult lift_walk(const Morphism& m, const Walk& w, int start);

struct ArcLiftability {
  bool liftable = true;
  std::vector<int> unhit_darts;  // target darts at m(x) with no preimage at x
};

ArcLiftability arc_liftable_at(const Morphism& m, int x);

/// A one-dart walk from m(x) that cannot be lifted at x. Throws InvalidArgument
/// when every arc lifts at x.
Walk obstruction_walk(const Morphism& m, int x);

/// Lexicographically smallest lift from start to end, by exhaustive search.
/// Throws EndpointNotOverWalk.
std::optional<Walk> lift_with_endpoints(const Morphism& m, const Walk& w, int start, int end);

}  // namespace uom
