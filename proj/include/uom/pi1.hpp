#pragma once

// Fundamental groups of finite graphs as free groups.
//
// The group here is the discrete free group pi_1 of the graph, not a profinite
// completion. For open maps of finite graphs the image of pi_1 has finite
// index, and finite-index subgroups of a free group are closed in the
// profinite topology, so discrete surjectivity decides surjectivity on the
// completion as well.
//
// Word tables depend on the chosen base point: moving it conjugates the image
// subgroup. Index and surjectivity are conjugation invariant and are the
// quantities reported everywhere else.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "uom/graph.hpp"
#include "uom/morphism.hpp"

namespace uom {

/// Reduced word in free generators. Letter +(j+1) is generator j, -(j+1) its inverse.
using Word = std::vector<int>;

Word free_reduce(Word w);
Word inverse(const Word& w);

struct Pi1Presentation {
  int base = 0;
  std::vector<int> parent_dart;        // vertex -> tree dart arriving from its parent, -1 at base
  std::vector<int> tree_darts;         // in discovery order, oriented away from base
  std::vector<int> generators;         // generator -> positive dart of a non-tree edge
  std::vector<int> generator_of_edge;  // edge -> generator, -1 for tree edges
  int rank = 0;

  /// Tree path from the base to v, as darts.
  std::vector<int> path_from_base(const Graph& g, int v) const;
  /// Closed walk at the base: tree path, generator dart, tree path back.
  std::vector<int> generator_loop(const Graph& g, int j) const;
  /// Word read off a dart sequence; tree darts contribute nothing.
  Word word_of_walk(std::span<const int> darts) const;
};

/// Spanning tree by breadth-first search from base, darts scanned in id order.
/// Throws DisconnectedGraph.
Pi1Presentation pi1(const Graph& g, int base);

struct InducedHom {
  Pi1Presentation source;
  Pi1Presentation target;
  std::vector<Word> words;  // source generator -> word in target generators
};

InducedHom induced_hom(const Morphism& m, int base);

struct LabeledEdge {
  int from = 0;
  int to = 0;
  int label = 0;  // generator index

  friend auto operator<=>(const LabeledEdge&, const LabeledEdge&) = default;
};

/// Folded core graph of a subgroup of the free group of the given rank. Vertices
/// are numbered by breadth-first search from the base (vertex 0), so two cores
/// compare equal exactly when they are isomorphic as based labeled graphs.
struct FoldedCore {
  int rank = 0;
  int vertex_count = 1;
  std::vector<LabeledEdge> edges;  // sorted
  std::optional<std::int64_t> index;  // empty: infinite index
  bool surjective = false;

  /// Generator j permutes the vertices when the index is finite.
  std::vector<std::vector<int>> coset_action() const;

  friend bool operator==(const FoldedCore&, const FoldedCore&) = default;
};

/// Stallings folding of the bouquet of word loops. With a shuffle seed the
/// petal edges are inserted in a pseudo-random order; the result is the same.
FoldedCore fold(std::span<const Word> words, int rank,
                std::optional<std::uint64_t> shuffle_seed = std::nullopt);
FoldedCore fold(const InducedHom& h, std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Dense integer matrix, row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}
  IntMatrix(int r, int c, std::vector<std::int64_t> values);

  std::int64_t& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  std::int64_t operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// Exponent sums: rows are target generators, column j abelianizes word j.
IntMatrix h1_matrix(const InducedHom& h);

/// Diagonal of the Smith normal form, nonnegative, one entry per nonzero invariant factor.
std::vector<std::int64_t> smith_invariants(const IntMatrix& m);

/// Surjective over Z: full row rank and every invariant factor equal to 1.
bool h1_surjective(const IntMatrix& m);
/// Surjective after reduction mod m: full rank mod every prime dividing m.
bool h1_mod_m_surjective(const IntMatrix& matrix, std::int64_t m);

/// Covering graph of g from one permutation of {0..d-1} per generator. Vertex
/// (v, sheet) gets id sheet * |V| + v and edge (e, sheet) id sheet * |E| + e,
/// where sheet is the sheet of the edge's first endpoint. Tree edges stay on
/// their sheet; generator j carries sheet i to perms[j][i].
Morphism cover_from_permutations(const Graph& g, const Pi1Presentation& pres, int degree,
                                 std::span<const std::vector<int>> perms);

struct EtaleFactorization {
  Morphism to_cover;  // X -> S'
  Morphism cover;     // S' -> S, a covering map
  int degree = 0;
  FoldedCore core;
};

/// Factors m as X -> S' -> S with S' -> S the cover attached to the image of
/// pi_1(X, base). Throws InfiniteIndex when the image has infinite index.
EtaleFactorization etale_factorization(const Morphism& m, int base = 0);

}  // namespace uom
