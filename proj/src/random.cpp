#include "uom/random.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "uom/pi1.hpp"

namespace uom {

int uniform_int(Rng& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

Graph random_connected_graph(Rng& rng, int vertices, int extra_edges) {
  Graph g(vertices);
  for (int v = 1; v < vertices; ++v) {
    const int parent = uniform_int(rng, 0, v - 1);
    if (uniform_int(rng, 0, 1)) {
      g.add_edge(parent, v);
    } else {
      g.add_edge(v, parent);
    }
  }
  for (int i = 0; i < extra_edges; ++i) {
    g.add_edge(uniform_int(rng, 0, vertices - 1), uniform_int(rng, 0, vertices - 1));
  }
  return g;
}

Perm random_perm(Rng& rng, int degree) {
  Perm p = perm_identity(degree);
  for (int i = degree; i > 1; --i) std::swap(p[i - 1], p[uniform_int(rng, 0, i - 1)]);
  return p;
}

PermAction random_action(Rng& rng, int degree, int rank) {
  PermAction a{degree, {}};
  for (int j = 0; j < rank; ++j) a.perms.push_back(random_perm(rng, degree));
  return a;
}

PermAction random_transitive_action(Rng& rng, int degree, int rank) {
  if (degree > 1 && rank == 0) throw Error(Errc::InvalidArgument, "rank 0 has no transitive action of degree > 1");
  for (;;) {
    PermAction a = random_action(rng, degree, rank);
    if (is_transitive(a)) return a;
  }
}

Morphism random_open_morphism(Rng& rng, const Graph& base, const RandomOpenConfig& cfg) {
  const Pi1Presentation pres = pi1(base, 0);
  const int nv = base.vertex_count();
  const int max_degree = std::max(1, std::min(cfg.max_degree, cfg.max_source_vertices / nv));
  const int degree = uniform_int(rng, 1, max_degree);
  const Morphism cover = cover_from_permutations(base, pres, degree, random_action(rng, degree, pres.rank).perms);

  // Vertex (v, sheet) has id sheet * nv + v.
  std::vector<std::pair<int, int>> glues;
  if (degree > 1) {
    const int extra = uniform_int(rng, 0, cfg.max_extra_glues);
    for (int i = 0; i < extra; ++i) {
      const int v = uniform_int(rng, 0, nv - 1);
      const int a = uniform_int(rng, 0, degree - 1);
      const int b = uniform_int(rng, 0, degree - 1);
      if (a != b) glues.emplace_back(a * nv + v, b * nv + v);
    }
  }
  // Every component of a cover of a connected base meets every fiber, so
  // components can always be joined over a randomly chosen base vertex.
  for (;;) {
    const Quotient q = glue_vertices(cover.source, glues);
    const ComponentLabeling labels = components(q.graph);
    if (labels.component_count == 1) break;
    const int v = uniform_int(rng, 0, nv - 1);
    std::vector<int> rep(labels.component_count, -1);
    for (int sheet = 0; sheet < degree; ++sheet) {
      int& r = rep[labels.labels[q.vertex_map[sheet * nv + v]]];
      if (r < 0) r = sheet * nv + v;
    }
    std::vector<int> present;
    for (int r : rep) {
      if (r >= 0) present.push_back(r);
    }
    const int join = present[uniform_int(rng, 1, static_cast<int>(present.size()) - 1)];
    glues.emplace_back(present.front(), join);
  }

  const Quotient q = glue_vertices(cover.source, glues);
  Morphism out{q.graph, base, std::vector<int>(q.graph.vertex_count()), cover.dart_map};
  for (int v = 0; v < cover.source.vertex_count(); ++v) out.vertex_map[q.vertex_map[v]] = cover.vertex_map[v];
  return out;
}

Morphism random_open_morphism(Rng& rng, const RandomOpenConfig& cfg) {
  const int nv = uniform_int(rng, cfg.min_base_vertices, cfg.max_base_vertices);
  const Graph base = random_connected_graph(rng, nv, uniform_int(rng, 0, cfg.max_extra_edges));
  const int rank = base.edge_count() - nv + 1;
  const int top = std::min(cfg.max_intermediate_degree, cfg.max_source_vertices / nv);
  const int d = rank > 0 && top > 1 ? uniform_int(rng, 1, top) : 1;
  if (d == 1) return random_open_morphism(rng, base, cfg);
  const auto pres = pi1(base, 0);
  const Morphism mid = cover_from_permutations(base, pres, d, random_transitive_action(rng, d, rank).perms);
  return compose(random_open_morphism(rng, mid.source, cfg), mid);
}

}  // namespace uom
