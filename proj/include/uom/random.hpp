#pragma once

// Random instances for the property suites. Open maps are built so that the
// hypotheses hold by construction: take a random (possibly disconnected) cover
// of a connected base, then identify vertices lying over the same base vertex.
// Identification keeps every vertex star surjective, so the result stays open.

#include <cstdint>
#include <random>

#include "uom/graph.hpp"
#include "uom/monodromy.hpp"
#include "uom/morphism.hpp"

namespace uom {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi] drawn by modulo, so streams are reproducible
/// across standard library implementations.
int uniform_int(Rng& rng, int lo, int hi);

struct RandomOpenConfig {
  int min_base_vertices = 1;
  int max_base_vertices = 6;
  int max_extra_edges = 3;  // beyond a spanning tree; loops allowed
  int max_degree = 4;
  int max_source_vertices = 40;
  int max_extra_glues = 3;
  // Degree of an intermediate connected cover S' -> S the map factors
  // through; 1 disables it. Such maps are never pi_1-surjective.
  int max_intermediate_degree = 1;
};

/// Connected multigraph: random spanning tree plus extra edges.
Graph random_connected_graph(Rng& rng, int vertices, int extra_edges);

Perm random_perm(Rng& rng, int degree);
PermAction random_action(Rng& rng, int degree, int rank);
/// Rejection-samples until transitive.
PermAction random_transitive_action(Rng& rng, int degree, int rank);

/// Open map from a connected graph onto base (which must be connected).
Morphism random_open_morphism(Rng& rng, const Graph& base, const RandomOpenConfig& cfg = {});
/// Same, over a freshly drawn base. With an intermediate cover, the map is
/// built over a random connected cover of the base and composed with it.
Morphism random_open_morphism(Rng& rng, const RandomOpenConfig& cfg = {});

}  // namespace uom
