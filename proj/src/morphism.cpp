#include "uom/morphism.hpp"

#include <algorithm>
#include <string>

namespace uom {

Morphism identity(const Graph& g) {
  Morphism m{g, g, std::vector<int>(g.vertex_count()), std::vector<int>(g.dart_count())};
  for (int v = 0; v < g.vertex_count(); ++v) m.vertex_map[v] = v;
  for (int d = 0; d < g.dart_count(); ++d) m.dart_map[d] = d;
  return m;
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (!(f.target == g.source)) throw Error(Errc::TargetMismatch, "compose: f.target != g.source");
  Morphism out{f.source, g.target, f.vertex_map, f.dart_map};
  for (auto& v : out.vertex_map) v = g.vertex_map[v];
  for (auto& d : out.dart_map) d = g.dart_map[d];
  return out;
}

std::optional<Violation> check_morphism(const Morphism& m) {
  if (auto v = validate(m.source)) return v;
  if (auto v = validate(m.target)) return v;
  if (static_cast<int>(m.vertex_map.size()) != m.source.vertex_count() ||
      static_cast<int>(m.dart_map.size()) != m.source.dart_count()) {
    return Violation{Errc::MapShape, -1, "map sizes do not match the source graph"};
  }
  for (int v = 0; v < m.source.vertex_count(); ++v) {
    const int w = m.vertex_map[v];
    if (w < 0 || w >= m.target.vertex_count()) {
      return Violation{Errc::MapShape, v, "vertex " + std::to_string(v) + " maps out of range"};
    }
  }
  for (int d = 0; d < m.source.dart_count(); ++d) {
    const int t = m.dart_map[d];
    if (t < 0 || t >= m.target.dart_count()) {
      return Violation{Errc::MapShape, d, "dart " + std::to_string(d) + " maps out of range"};
    }
  }
  for (int d = 0; d < m.source.dart_count(); ++d) {
    if (m.dart_map[m.source.partner(d)] != m.target.partner(m.dart_map[d])) {
      return Violation{Errc::InvolutionMismatch, d,
                       "dart " + std::to_string(d) + " and its partner map to non-partners"};
    }
  }
  for (int d = 0; d < m.source.dart_count(); ++d) {
    if (m.target.origin(m.dart_map[d]) != m.vertex_map[m.source.origin(d)]) {
      return Violation{Errc::OriginMismatch, d,
                       "origin of image of dart " + std::to_string(d) + " disagrees with vertex map"};
    }
  }
  return std::nullopt;
}

namespace {

// For each source vertex: how many of its darts land on each target dart at the image.
template <typename Visit>
void for_each_star_image(const Morphism& m, Visit visit) {
  const auto source_stars = m.source.stars();
  const auto target_stars = m.target.stars();
  std::vector<int> hits(m.target.dart_count(), 0);
  for (int v = 0; v < m.source.vertex_count(); ++v) {
    for (int d : source_stars[v]) ++hits[m.dart_map[d]];
    const auto& image_star = target_stars[m.vertex_map[v]];
    visit(v, source_stars[v], image_star, hits);
    for (int d : source_stars[v]) hits[m.dart_map[d]] = 0;
  }
}

}  // namespace

OpennessReport openness(const Morphism& m) {
  OpennessReport report;
  for_each_star_image(m, [&](int v, const auto&, const auto& image_star, const auto& hits) {
    for (int t : image_star) {
      if (hits[t] == 0) report.failures.emplace_back(v, t);
    }
  });
  report.open_everywhere = report.failures.empty();
  return report;
}

bool is_cover(const Morphism& m) {
  bool cover = true;
  for_each_star_image(m, [&](int, const auto& star, const auto& image_star, const auto& hits) {
    if (star.size() != image_star.size()) cover = false;
    for (int t : image_star) {
      if (hits[t] != 1) cover = false;
    }
  });
  return cover;
}

bool is_surjective(const Morphism& m) {
  std::vector<char> hit_v(m.target.vertex_count(), 0), hit_d(m.target.dart_count(), 0);
  for (int w : m.vertex_map) hit_v[w] = 1;
  for (int t : m.dart_map) hit_d[t] = 1;
  return std::all_of(hit_v.begin(), hit_v.end(), [](char c) { return c; }) &&
         std::all_of(hit_d.begin(), hit_d.end(), [](char c) { return c; });
}

Subdivision subdivide_to_simplicial(const MapSpec& spec) {
  const Graph& src = spec.source;
  const Graph& tgt = spec.target;
  if (static_cast<int>(spec.vertex_map.size()) != src.vertex_count() ||
      static_cast<int>(spec.edge_walks.size()) != src.edge_count()) {
    throw Error(Errc::MapShape, "map spec sizes do not match the source graph");
  }
  for (int v = 0; v < src.vertex_count(); ++v) {
    if (spec.vertex_map[v] < 0 || spec.vertex_map[v] >= tgt.vertex_count()) {
      throw Error(Errc::MapShape, "vertex " + std::to_string(v) + " maps out of range");
    }
  }
  for (int e = 0; e < src.edge_count(); ++e) {
    const auto& walk = spec.edge_walks[e];
    if (walk.empty()) throw Error(Errc::CollapsedEdge, "edge " + std::to_string(e) + " maps to a point");
    for (int t : walk) {
      if (t < 0 || t >= tgt.dart_count()) {
        throw Error(Errc::WalkMismatch, "edge " + std::to_string(e) + " walk uses unknown dart");
      }
    }
    if (tgt.origin(walk.front()) != spec.vertex_map[src.origin(positive_dart(e))] ||
        tgt.head(walk.back()) != spec.vertex_map[src.origin(negative_dart(e))]) {
      throw Error(Errc::WalkMismatch,
                  "edge " + std::to_string(e) + " walk endpoints disagree with vertex map");
    }
    for (std::size_t i = 1; i < walk.size(); ++i) {
      if (tgt.head(walk[i - 1]) != tgt.origin(walk[i])) {
        throw Error(Errc::WalkMismatch, "edge " + std::to_string(e) + " walk is not contiguous");
      }
    }
  }

  Subdivision out;
  Graph g(src.vertex_count());
  std::vector<int> vmap = spec.vertex_map;
  out.new_vertices.resize(src.edge_count());
  out.edge_pieces.resize(src.edge_count());
  for (int e = 0; e < src.edge_count(); ++e) {
    const auto& walk = spec.edge_walks[e];
    for (std::size_t i = 1; i < walk.size(); ++i) {
      out.new_vertices[e].push_back(g.add_vertex());
      vmap.push_back(tgt.origin(walk[i]));
    }
  }
  std::vector<int> dmap;
  for (int e = 0; e < src.edge_count(); ++e) {
    const auto& walk = spec.edge_walks[e];
    const auto& inner = out.new_vertices[e];
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const int u = i == 0 ? src.origin(positive_dart(e)) : inner[i - 1];
      const int v = i + 1 == walk.size() ? src.origin(negative_dart(e)) : inner[i];
      out.edge_pieces[e].push_back(g.add_edge(u, v));
      dmap.push_back(walk[i]);
      dmap.push_back(tgt.partner(walk[i]));
    }
  }
  out.morphism = Morphism{std::move(g), tgt, std::move(vmap), std::move(dmap)};
  return out;
}

Morphism subdivide_target(const Morphism& m) {
  // Target: each edge u->v becomes u->mid, mid->v; mid vertices appended in edge order.
  auto split = [](const Graph& g) {
    Graph out(g.vertex_count() + g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
      const int mid = g.vertex_count() + e;
      out.add_edge(g.origin(positive_dart(e)), mid);
      out.add_edge(mid, g.origin(negative_dart(e)));
    }
    return out;
  };
  Graph src = split(m.source);
  Graph tgt = split(m.target);
  std::vector<int> vmap(src.vertex_count());
  for (int v = 0; v < m.source.vertex_count(); ++v) vmap[v] = m.vertex_map[v];
  std::vector<int> dmap(src.dart_count());
  for (int e = 0; e < m.source.edge_count(); ++e) {
    const int t = m.dart_map[positive_dart(e)];
    const int te = edge_of(t);
    vmap[m.source.vertex_count() + e] = m.target.vertex_count() + te;
    // Old edge e -> new edges 2e (first half) and 2e+1 (second half).
    const bool forward = t == positive_dart(te);
    const int first = forward ? 2 * te : 2 * te + 1;
    const int second = forward ? 2 * te + 1 : 2 * te;
    dmap[positive_dart(2 * e)] = forward ? positive_dart(first) : negative_dart(first);
    dmap[negative_dart(2 * e)] = forward ? negative_dart(first) : positive_dart(first);
    dmap[positive_dart(2 * e + 1)] = forward ? positive_dart(second) : negative_dart(second);
    dmap[negative_dart(2 * e + 1)] = forward ? negative_dart(second) : positive_dart(second);
  }
  return Morphism{std::move(src), std::move(tgt), std::move(vmap), std::move(dmap)};
}

}  // namespace uom
