#pragma once

#include "uom/morphism.hpp"

namespace uom::testing {

/// The map restricted to the source with edge e removed; later edges shift down.
inline Morphism drop_edge(const Morphism& m, int e) {
  Morphism out{Graph(m.source.vertex_count()), m.target, m.vertex_map, {}};
  for (int k = 0; k < m.source.edge_count(); ++k) {
    if (k == e) continue;
    out.source.add_edge(m.source.origin(positive_dart(k)), m.source.origin(negative_dart(k)));
    out.dart_map.push_back(m.dart_map[positive_dart(k)]);
    out.dart_map.push_back(m.dart_map[negative_dart(k)]);
  }
  return out;
}

template <typename F>
Errc error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected an uom::Error");
}

}  // namespace uom::testing
