#pragma once

// Non-degenerate simplicial maps between graphs: vertices to vertices, darts to
// darts. Openness here is the star criterion: at every source vertex the darts
// leaving it must hit every dart leaving its image. This models universal
// openness. A map that is merely open in the Zariski sense, such as the
// normalization of a nodal curve, fails the criterion and is reported as not
// open.

#include <optional>
#include <utility>
#include <vector>

#include "uom/graph.hpp"

namespace uom {

struct Morphism {
  Graph source;
  Graph target;
  std::vector<int> vertex_map;
  std::vector<int> dart_map;

  int vertex(int v) const { return vertex_map[v]; }
  int dart(int d) const { return dart_map[d]; }

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

Morphism identity(const Graph& g);

/// g after f. Requires f.target == g.source.
Morphism compose(const Morphism& f, const Morphism& g);

/// Verifies that the dart map commutes with partners and with origins.
std::optional<Violation> check_morphism(const Morphism& m);

struct OpennessReport {
  bool open_everywhere = true;
  std::vector<std::pair<int, int>> failures;  // (source vertex, unhit target dart)
};

OpennessReport openness(const Morphism& m);

/// True iff every vertex star maps bijectively (a covering map).
bool is_cover(const Morphism& m);

/// Pre-simplicial map: every source edge goes to a nonempty directed walk.
struct MapSpec {
  Graph source;
  Graph target;
  std::vector<int> vertex_map;
  std::vector<std::vector<int>> edge_walks;  // source edge -> target darts

  friend bool operator==(const MapSpec&, const MapSpec&) = default;
};

struct Subdivision {
  Morphism morphism;
  std::vector<std::vector<int>> edge_pieces;   // old edge -> new edge ids, in walk order
  std::vector<std::vector<int>> new_vertices;  // old edge -> inserted vertices, in walk order
};

/// Splits every source edge mapped to a walk of length k into k edges. Inserted
/// vertices are appended after the existing ones in edge-id order; the pieces
/// of an edge are numbered consecutively.
Subdivision subdivide_to_simplicial(const MapSpec& spec);

/// Splits each target edge into two and the source edges over it to match.
/// Used to check that verdicts survive refinement.
Morphism subdivide_target(const Morphism& m);

/// True iff every target vertex and dart is hit.
bool is_surjective(const Morphism& m);

}  // namespace uom
