#include "uom/lifting.hpp"

#include <string>

namespace uom {

std::optional<Violation> validate_walk(const Graph& g, const Walk& w) {
  if (w.start < 0 || w.start >= g.vertex_count()) {
    return Violation{Errc::InvalidWalk, -1, "walk starts outside the graph"};
  }
  int at = w.start;
  for (std::size_t i = 0; i < w.darts.size(); ++i) {
    const int d = w.darts[i];
    if (d < 0 || d >= g.dart_count() || g.origin(d) != at) {
      return Violation{Errc::InvalidWalk, static_cast<int>(i),
                       "step " + std::to_string(i) + " does not continue the walk"};
    }
    at = g.head(d);
  }
  return std::nullopt;
}

namespace {

void require_walk(const Graph& g, const Walk& w) {
  if (auto v = validate_walk(g, w)) throw Error(v->code, v->message);
}

}  // namespace

LiftResult lift_walk(const Morphism& m, const Walk& w, int start) {
  require_walk(m.target, w);
  if (start < 0 || start >= m.source.vertex_count() || m.vertex_map[start] != w.start) {
    throw Error(Errc::StartNotOverWalk, "vertex " + std::to_string(start) + " is not over the walk start");
  }
  const auto stars = m.source.stars();
  LiftResult result;
  Walk lifted{start, {}};
  int at = start;
  for (std::size_t i = 0; i < w.darts.size(); ++i) {
    int chosen = -1;
    for (int d : stars[at]) {
      if (m.dart_map[d] == w.darts[i]) {
        chosen = d;
        break;
      }
    }
    if (chosen < 0) {
      result.obstruction = Obstruction{static_cast<int>(i), at, w.darts[i]};
      return result;
    }
    lifted.darts.push_back(chosen);
    at = m.source.head(chosen);
  }
  result.lift = std::move(lifted);
  return result;
}

ArcLiftability arc_liftable_at(const Morphism& m, int x) {
  if (x < 0 || x >= m.source.vertex_count()) {
    throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(x) + " out of range");
  }
  std::vector<char> hit(m.target.dart_count(), 0);
  for (int d : m.source.star(x)) hit[m.dart_map[d]] = 1;
  ArcLiftability out;
  for (int t : m.target.star(m.vertex_map[x])) {
    if (!hit[t]) out.unhit_darts.push_back(t);
  }
  out.liftable = out.unhit_darts.empty();
  return out;
}

Walk obstruction_walk(const Morphism& m, int x) {
  const auto arc = arc_liftable_at(m, x);
  if (arc.liftable) {
    throw Error(Errc::InvalidArgument, "every arc lifts at vertex " + std::to_string(x));
  }
  return Walk{m.vertex_map[x], {arc.unhit_darts.front()}};
}

std::optional<Walk> lift_with_endpoints(const Morphism& m, const Walk& w, int start, int end) {
  require_walk(m.target, w);
  const int n = m.source.vertex_count();
  if (start < 0 || start >= n || m.vertex_map[start] != w.start || end < 0 || end >= n ||
      m.vertex_map[end] != w.end(m.target)) {
    throw Error(Errc::EndpointNotOverWalk, "endpoints do not lie over the walk's endpoints");
  }
  const auto stars = m.source.stars();
  const std::size_t steps = w.darts.size();
  // dead[i * n + v]: no completion reaches `end` from v after i steps.
  std::vector<char> dead((steps + 1) * static_cast<std::size_t>(n), 0);
  Walk lifted{start, {}};

  auto search = [&](auto&& self, std::size_t i, int v) -> bool {
    if (i == steps) return v == end;
    if (dead[i * n + v]) return false;
    for (int d : stars[v]) {
      if (m.dart_map[d] != w.darts[i]) continue;
      lifted.darts.push_back(d);
      if (self(self, i + 1, m.source.head(d))) return true;
      lifted.darts.pop_back();
    }
    dead[i * n + v] = 1;
    return false;
  };
  if (!search(search, 0, start)) return std::nullopt;
  return lifted;
}

}  // namespace uom
