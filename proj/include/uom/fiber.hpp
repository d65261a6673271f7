#pragma once

// Fiber products of non-degenerate graph maps over a common base. Vertices of
// X x_S Y are pairs (x, y) over the same base vertex and edges are pairs of
// edges over the same base edge; for simplicial maps this is the topological
// fiber product of the realizations.

#include <cstdint>
#include <utility>
#include <vector>

#include "uom/graph.hpp"
#include "uom/morphism.hpp"

namespace uom {

inline constexpr std::int64_t kDefaultPairCap = 10'000'000;

struct FiberProduct {
  Graph product;
  Morphism proj_left;
  Morphism proj_right;
  Morphism to_base;
  std::vector<std::pair<int, int>> vertex_pairs;  // lexicographic in (left, right)
  std::vector<std::pair<int, int>> dart_pairs;

  /// Index of the vertex (x, y), or -1 if x and y lie over different base vertices.
  int vertex_of(int x, int y) const;
};

/// Number of vertex pairs sum_s |X_s| * |Y_s|, computed without building anything.
std::int64_t fiber_pair_count(const Morphism& f, const Morphism& g);

FiberProduct fiber_product(const Morphism& f, const Morphism& g,
                           std::int64_t cap = kDefaultPairCap);

struct FiberPower {
  int n = 0;
  Graph power;
  Morphism to_base;
  std::vector<Morphism> projections;           // one per factor
  std::vector<std::vector<int>> vertex_tuples;  // vertex -> (x_1, ..., x_n)
  std::vector<std::vector<int>> dart_tuples;
  std::vector<int> diagonal_vertices;  // source vertex x -> index of (x, ..., x)
};

/// n-fold fiber power, built as ((X x_S X) x_S X) ... ; n = 1 returns the source.
FiberPower fiber_power(const Morphism& f, int n, std::int64_t cap = kDefaultPairCap);

struct DiagonalComponent {
  FiberProduct square;
  ComponentLabeling labeling;
  int component = 0;
  Subgraph subgraph;
};

/// The component of X x_S X containing every diagonal vertex (x, x).
/// Throws DisconnectedSource if the diagonal meets several components.
DiagonalComponent diagonal_component(const Morphism& f, std::int64_t cap = kDefaultPairCap);

}  // namespace uom
