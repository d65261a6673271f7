#pragma once

// Finite multigraphs stored as half-edges (darts). Edge k owns darts 2k and
// 2k+1; dart 2k runs from the first endpoint to the second. Loops and
// parallel edges need no special casing.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "uom/error.hpp"

namespace uom {

struct Dart {
  int origin = 0;
  int partner = 0;

  friend bool operator==(const Dart&, const Dart&) = default;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  /// Builds a graph from raw darts without checking anything; pair with validate().
  static Graph from_darts(int vertex_count, std::vector<Dart> darts);

  /// Appends an edge u -> v and returns its edge id.
  int add_edge(int u, int v);
  /// Appends an isolated vertex and returns its index.
  int add_vertex();

  int vertex_count() const noexcept { return vertex_count_; }
  int dart_count() const noexcept { return static_cast<int>(darts_.size()); }
  int edge_count() const noexcept { return dart_count() / 2; }

  int origin(int dart) const { return darts_[dart].origin; }
  int partner(int dart) const { return darts_[dart].partner; }
  /// Vertex the dart points to.
  int head(int dart) const { return origin(partner(dart)); }

  std::span<const Dart> darts() const noexcept { return darts_; }

  /// Darts leaving v, ascending by id. A loop at v contributes both darts.
  std::vector<int> star(int v) const;
  std::vector<std::vector<int>> stars() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Dart> darts_;
};

constexpr int edge_of(int dart) noexcept { return dart / 2; }
constexpr int positive_dart(int edge) noexcept { return 2 * edge; }
constexpr int negative_dart(int edge) noexcept { return 2 * edge + 1; }

/// Checks the involution and origin invariants; reports the first failing dart.
std::optional<Violation> validate(const Graph& g);

struct ComponentLabeling {
  std::vector<int> labels;  // vertex -> component id
  int component_count = 0;

  friend bool operator==(const ComponentLabeling&, const ComponentLabeling&) = default;
};

/// Component ids are assigned in order of the smallest vertex they contain.
ComponentLabeling components(const Graph& g);

struct DisjointUnion {
  Graph graph;
  std::vector<int> vertex_offset;  // one per input graph
  std::vector<int> dart_offset;
};

DisjointUnion disjoint_union(std::span<const Graph> graphs);

struct Quotient {
  Graph graph;
  std::vector<int> vertex_map;  // old vertex -> new vertex
};

/// Identifies the listed vertex pairs (transitively). New vertex ids follow the
/// order of the smallest old vertex in each class; dart ids are preserved.
Quotient glue_vertices(const Graph& g, std::span<const std::pair<int, int>> pairs);

struct Subgraph {
  Graph graph;
  std::vector<int> vertices;  // new vertex -> old vertex
  std::vector<int> edges;     // new edge -> old edge
};

/// Subgraph spanned by one component, vertices and edges kept in ascending order.
Subgraph component_subgraph(const Graph& g, const ComponentLabeling& labeling, int component);

/// Disjoint-set forest with path halving; the smaller index wins on union.
class UnionFind {
 public:
  explicit UnionFind(int n);
  int find(int x);
  /// Returns true if x and y were in different sets.
  bool unite(int x, int y);

 private:
  std::vector<int> parent_;
};

}  // namespace uom
