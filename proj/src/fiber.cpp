#include "uom/fiber.hpp"

#include <algorithm>
#include <string>

namespace uom {

namespace {

std::vector<std::vector<int>> fibers_over_vertices(const Morphism& f) {
  std::vector<std::vector<int>> out(f.target.vertex_count());
  for (int x = 0; x < f.source.vertex_count(); ++x) out[f.vertex_map[x]].push_back(x);
  return out;
}

}  // namespace

int FiberProduct::vertex_of(int x, int y) const {
  auto it = std::lower_bound(vertex_pairs.begin(), vertex_pairs.end(), std::pair{x, y});
  if (it == vertex_pairs.end() || *it != std::pair{x, y}) return -1;
  return static_cast<int>(it - vertex_pairs.begin());
}

std::int64_t fiber_pair_count(const Morphism& f, const Morphism& g) {
  if (!(f.target == g.target)) throw Error(Errc::TargetMismatch, "fiber product over different bases");
  std::vector<std::int64_t> left(f.target.vertex_count(), 0), right(g.target.vertex_count(), 0);
  for (int s : f.vertex_map) ++left[s];
  for (int s : g.vertex_map) ++right[s];
  std::int64_t total = 0;
  for (std::size_t s = 0; s < left.size(); ++s) total += left[s] * right[s];
  return total;
}

FiberProduct fiber_product(const Morphism& f, const Morphism& g, std::int64_t cap) {
  const std::int64_t pairs = fiber_pair_count(f, g);
  if (pairs > cap) {
    throw Error(Errc::SizeGuard, std::to_string(pairs) + " vertex pairs exceed cap " + std::to_string(cap));
  }
  const Graph& base = f.target;
  const auto right_fibers = fibers_over_vertices(g);
  std::vector<int> pos_in_fiber(g.source.vertex_count());
  for (const auto& fib : right_fibers) {
    for (std::size_t i = 0; i < fib.size(); ++i) pos_in_fiber[fib[i]] = static_cast<int>(i);
  }

  FiberProduct out;
  std::vector<int> first_vertex(f.source.vertex_count());
  for (int x = 0; x < f.source.vertex_count(); ++x) {
    first_vertex[x] = static_cast<int>(out.vertex_pairs.size());
    for (int y : right_fibers[f.vertex_map[x]]) out.vertex_pairs.emplace_back(x, y);
  }
  const auto id = [&](int x, int y) { return first_vertex[x] + pos_in_fiber[y]; };

  std::vector<std::vector<int>> right_darts_over(base.dart_count());
  for (int e = 0; e < g.source.dart_count(); ++e) right_darts_over[g.dart_map[e]].push_back(e);

  out.product = Graph(static_cast<int>(out.vertex_pairs.size()));
  for (int a = 0; a < f.source.edge_count(); ++a) {
    const int d = positive_dart(a);
    for (int e : right_darts_over[f.dart_map[d]]) {
      const int pd = f.source.partner(d);
      const int pe = g.source.partner(e);
      out.product.add_edge(id(f.source.origin(d), g.source.origin(e)),
                           id(f.source.origin(pd), g.source.origin(pe)));
      out.dart_pairs.emplace_back(d, e);
      out.dart_pairs.emplace_back(pd, pe);
    }
  }

  const int nv = out.product.vertex_count();
  const int nd = out.product.dart_count();
  out.proj_left = Morphism{out.product, f.source, std::vector<int>(nv), std::vector<int>(nd)};
  out.proj_right = Morphism{out.product, g.source, std::vector<int>(nv), std::vector<int>(nd)};
  out.to_base = Morphism{out.product, base, std::vector<int>(nv), std::vector<int>(nd)};
  for (int v = 0; v < nv; ++v) {
    const auto [x, y] = out.vertex_pairs[v];
    out.proj_left.vertex_map[v] = x;
    out.proj_right.vertex_map[v] = y;
    out.to_base.vertex_map[v] = f.vertex_map[x];
  }
  for (int d = 0; d < nd; ++d) {
    const auto [a, b] = out.dart_pairs[d];
    out.proj_left.dart_map[d] = a;
    out.proj_right.dart_map[d] = b;
    out.to_base.dart_map[d] = f.dart_map[a];
  }
  return out;
}

FiberPower fiber_power(const Morphism& f, int n, std::int64_t cap) {
  if (n < 1) throw Error(Errc::NonPositiveN, "fiber power needs n >= 1, got " + std::to_string(n));
  FiberPower out;
  out.n = 1;
  out.power = f.source;
  out.to_base = f;
  for (int x = 0; x < f.source.vertex_count(); ++x) out.vertex_tuples.push_back({x});
  for (int d = 0; d < f.source.dart_count(); ++d) out.dart_tuples.push_back({d});

  for (int k = 2; k <= n; ++k) {
    FiberProduct step = fiber_product(out.to_base, f, cap);
    std::vector<std::vector<int>> vt, dt;
    vt.reserve(step.vertex_pairs.size());
    for (const auto& [p, x] : step.vertex_pairs) {
      auto t = out.vertex_tuples[p];
      t.push_back(x);
      vt.push_back(std::move(t));
    }
    for (const auto& [p, x] : step.dart_pairs) {
      auto t = out.dart_tuples[p];
      t.push_back(x);
      dt.push_back(std::move(t));
    }
    out.n = k;
    out.power = std::move(step.product);
    out.to_base = std::move(step.to_base);
    out.vertex_tuples = std::move(vt);
    out.dart_tuples = std::move(dt);
  }

  for (int i = 0; i < n; ++i) {
    Morphism p{out.power, f.source, std::vector<int>(out.power.vertex_count()),
               std::vector<int>(out.power.dart_count())};
    for (int v = 0; v < out.power.vertex_count(); ++v) p.vertex_map[v] = out.vertex_tuples[v][i];
    for (int d = 0; d < out.power.dart_count(); ++d) p.dart_map[d] = out.dart_tuples[d][i];
    out.projections.push_back(std::move(p));
  }

  out.diagonal_vertices.assign(f.source.vertex_count(), -1);
  for (int v = 0; v < out.power.vertex_count(); ++v) {
    const auto& t = out.vertex_tuples[v];
    if (std::all_of(t.begin(), t.end(), [&](int x) { return x == t.front(); })) {
      out.diagonal_vertices[t.front()] = v;
    }
  }
  return out;
}

DiagonalComponent diagonal_component(const Morphism& f, std::int64_t cap) {
  DiagonalComponent out;
  out.square = fiber_product(f, f, cap);
  out.labeling = components(out.square.product);
  out.component = -1;
  for (int x = 0; x < f.source.vertex_count(); ++x) {
    const int label = out.labeling.labels[out.square.vertex_of(x, x)];
    if (out.component < 0) {
      out.component = label;
    } else if (label != out.component) {
      throw Error(Errc::DisconnectedSource,
                  "diagonal meets components " + std::to_string(out.component) + " and " +
                      std::to_string(label));
    }
  }
  if (out.component < 0) throw Error(Errc::DisconnectedSource, "empty source graph");
  out.subgraph = component_subgraph(out.square.product, out.labeling, out.component);
  return out;
}

}  // namespace uom
