#pragma once

// Graph models of a nodal rational curve C and the maps around it.
//
// C is a 2-gon: vertex 0 (w) is the node image, vertex 1 (c) a smooth marked
// point, edge 0 runs w -> c and edge 1 runs c -> w. The normalization Cbar is
// the interval a - cbar - b with a, b over w. C_n is the 2n-gon winding n times
// around C, and X_{n,m} glues C_n and C_m at their first point over c.

#include <cstdint>

#include "uom/document.hpp"
#include "uom/fiber.hpp"
#include "uom/monodromy.hpp"
#include "uom/morphism.hpp"
#include "uom/report.hpp"

namespace uom {

Graph nodal_curve();
/// Cbar -> C. Not open at a and b: the star criterion fails at both ends.
Morphism normalization();
/// C_n -> C, the connected degree-n cover. Vertex k lies over k % 2.
Morphism cycle_cover(int n);
/// X_{n,m} -> C. Vertex 1 is the glue point.
Morphism glued_cover(int n, int m);

inline constexpr int kGlueVertex = 1;

/// Graphs C, Cbar, C_n, C_m, X_n_m and maps nu, g_n, g_m, g_n_m. Throws NonPositive.
Document scenario_nodal(int n, int m);

Report nodal_report(int n, int m, std::int64_t cap = kDefaultPairCap);
Report quotient_report(const QuotientScenario& s);

}  // namespace uom
