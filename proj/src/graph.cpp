#include "uom/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace uom {

Graph::Graph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw Error(Errc::IndexOutOfRange, "negative vertex count");
}

Graph Graph::from_darts(int vertex_count, std::vector<Dart> darts) {
  Graph g;
  g.vertex_count_ = vertex_count;
  g.darts_ = std::move(darts);
  return g;
}

int Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
    throw Error(Errc::IndexOutOfRange,
                "edge endpoint " + std::to_string(std::max(u, v)) + " outside graph of " +
                    std::to_string(vertex_count_) + " vertices");
  }
  const int d = dart_count();
  darts_.push_back({u, d + 1});
  darts_.push_back({v, d});
  return d / 2;
}

int Graph::add_vertex() { return vertex_count_++; }

std::vector<int> Graph::star(int v) const {
  std::vector<int> out;
  for (int d = 0; d < dart_count(); ++d) {
    if (origin(d) == v) out.push_back(d);
  }
  return out;
}

std::vector<std::vector<int>> Graph::stars() const {
  std::vector<std::vector<int>> out(vertex_count_);
  for (int d = 0; d < dart_count(); ++d) out[origin(d)].push_back(d);
  return out;
}

std::optional<Violation> validate(const Graph& g) {
  const int n = g.dart_count();
  if (n % 2 != 0) {
    return Violation{Errc::InvalidInvolution, n - 1, "odd number of darts"};
  }
  for (int d = 0; d < n; ++d) {
    const int p = g.partner(d);
    if (p < 0 || p >= n || p == d || g.partner(p) != d || p != (d ^ 1)) {
      return Violation{Errc::InvalidInvolution, d,
                       "dart " + std::to_string(d) + " has partner " + std::to_string(p)};
    }
  }
  for (int d = 0; d < n; ++d) {
    const int o = g.origin(d);
    if (o < 0 || o >= g.vertex_count()) {
      return Violation{Errc::DanglingOrigin, d,
                       "dart " + std::to_string(d) + " has origin " + std::to_string(o)};
    }
  }
  return std::nullopt;
}

UnionFind::UnionFind(int n) : parent_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int x) {
  auto& p = parent_;
  while (p[x] != x) {
    p[x] = p[p[x]];
    x = p[x];
  }
  return x;
}

bool UnionFind::unite(int x, int y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (y < x) std::swap(x, y);
  parent_[y] = x;
  return true;
}

ComponentLabeling components(const Graph& g) {
  UnionFind uf(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    uf.unite(g.origin(positive_dart(e)), g.origin(negative_dart(e)));
  }
  ComponentLabeling out;
  out.labels.assign(g.vertex_count(), -1);
  std::vector<int> root_label(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto& slot = root_label[uf.find(v)];
    if (slot < 0) slot = out.component_count++;
    out.labels[v] = slot;
  }
  return out;
}

DisjointUnion disjoint_union(std::span<const Graph> graphs) {
  DisjointUnion out;
  int vertices = 0;
  for (const auto& g : graphs) {
    out.vertex_offset.push_back(vertices);
    vertices += g.vertex_count();
  }
  out.graph = Graph(vertices);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    out.dart_offset.push_back(out.graph.dart_count());
    for (int e = 0; e < g.edge_count(); ++e) {
      out.graph.add_edge(g.origin(positive_dart(e)) + out.vertex_offset[i],
                         g.origin(negative_dart(e)) + out.vertex_offset[i]);
    }
  }
  return out;
}

Quotient glue_vertices(const Graph& g, std::span<const std::pair<int, int>> pairs) {
  UnionFind uf(g.vertex_count());
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count()) {
      throw Error(Errc::IndexOutOfRange, "glue pair (" + std::to_string(a) + ", " +
                                             std::to_string(b) + ") out of range");
    }
    uf.unite(a, b);
  }
  Quotient out;
  out.vertex_map.assign(g.vertex_count(), -1);
  std::vector<int> root_id(g.vertex_count(), -1);
  int count = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto& slot = root_id[uf.find(v)];
    if (slot < 0) slot = count++;
    out.vertex_map[v] = slot;
  }
  out.graph = Graph(count);
  for (int e = 0; e < g.edge_count(); ++e) {
    out.graph.add_edge(out.vertex_map[g.origin(positive_dart(e))],
                       out.vertex_map[g.origin(negative_dart(e))]);
  }
  return out;
}

Subgraph component_subgraph(const Graph& g, const ComponentLabeling& labeling, int component) {
  Subgraph out;
  std::vector<int> renumber(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (labeling.labels[v] == component) {
      renumber[v] = static_cast<int>(out.vertices.size());
      out.vertices.push_back(v);
    }
  }
  out.graph = Graph(static_cast<int>(out.vertices.size()));
  for (int e = 0; e < g.edge_count(); ++e) {
    const int u = g.origin(positive_dart(e));
    if (labeling.labels[u] != component) continue;
    out.graph.add_edge(renumber[u],
                       renumber[g.origin(negative_dart(e))]);
    out.edges.push_back(e);
  }
  return out;
}

}  // namespace uom
