#include "uom/nodal.hpp"

#include <numeric>
#include <string>

#include "uom/pi1.hpp"
#include "uom/conditions.hpp"

namespace uom {

Graph nodal_curve() {
  Graph c(2);
  c.add_edge(0, 1);
  c.add_edge(1, 0);
  return c;
}

Morphism normalization() {
  Graph bar(3);  // a = 0, cbar = 1, b = 2
  bar.add_edge(0, 1);
  bar.add_edge(1, 2);
  return Morphism{bar, nodal_curve(), {0, 1, 0}, {0, 1, 2, 3}};
}

Morphism cycle_cover(int n) {
  if (n < 1) throw Error(Errc::NonPositive, "cover degree must be positive");
  Graph g(2 * n);
  Morphism m{{}, nodal_curve(), {}, {}};
  for (int k = 0; k < 2 * n; ++k) {
    g.add_edge(k, (k + 1) % (2 * n));
    m.vertex_map.push_back(k % 2);
    m.dart_map.push_back(positive_dart(k % 2));
    m.dart_map.push_back(negative_dart(k % 2));
  }
  m.source = std::move(g);
  return m;
}

Morphism glued_cover(int n, int m) {
  const Morphism gn = cycle_cover(n);
  const Morphism gm = cycle_cover(m);
  const std::vector<Graph> parts{gn.source, gm.source};
  const DisjointUnion u = disjoint_union(parts);
  const std::pair<int, int> glue{kGlueVertex, u.vertex_offset[1] + kGlueVertex};
  const Quotient q = glue_vertices(u.graph, std::span(&glue, 1));

  Morphism out{q.graph, nodal_curve(), std::vector<int>(q.graph.vertex_count()), {}};
  for (int v = 0; v < gn.source.vertex_count(); ++v) out.vertex_map[q.vertex_map[v]] = gn.vertex_map[v];
  for (int v = 0; v < gm.source.vertex_count(); ++v) {
    out.vertex_map[q.vertex_map[u.vertex_offset[1] + v]] = gm.vertex_map[v];
  }
  out.dart_map = gn.dart_map;
  out.dart_map.insert(out.dart_map.end(), gm.dart_map.begin(), gm.dart_map.end());
  return out;
}

Document scenario_nodal(int n, int m) {
  if (n < 1 || m < 1) throw Error(Errc::NonPositive, "n and m must be positive");
  Document doc;
  const Morphism nu = normalization();
  const Morphism gn = cycle_cover(n);
  const Morphism gm = cycle_cover(m);
  const Morphism gnm = glued_cover(n, m);
  const std::string cn = "C_" + std::to_string(n);
  const std::string cm = "C_" + std::to_string(m);
  const std::string x = "X_" + std::to_string(n) + "_" + std::to_string(m);

  doc.add_graph("C", nu.target);
  doc.add_graph("Cbar", nu.source);
  doc.add_graph(cn, gn.source);
  if (m != n) doc.add_graph(cm, gm.source);
  doc.add_graph(x, gnm.source);
  doc.add_morphism("nu", "Cbar", "C", nu);
  doc.add_morphism("g_" + std::to_string(n), cn, "C", gn);
  if (m != n) doc.add_morphism("g_" + std::to_string(m), cm, "C", gm);
  doc.add_morphism("g_" + std::to_string(n) + "_" + std::to_string(m), x, "C", gnm);
  return doc;
}

Report nodal_report(int n, int m, std::int64_t cap) {
  const Document doc = scenario_nodal(n, m);
  const Morphism& nu = doc.morphism("nu").morphism;
  const Morphism& f = doc.morphisms.back().morphism;
  Report rep;

  for (const auto& nm : doc.morphisms) {
    rep.require("nodal.valid." + nm.name, !check_morphism(nm.morphism).has_value());
  }
  const auto nu_open = openness(nu);
  std::string failing;
  for (const auto& [v, t] : nu_open.failures) {
    failing += (failing.empty() ? "" : ",") + std::to_string(v) + ":" + std::to_string(t);
  }
  rep.add("nodal.normalization_open", nu_open.open_everywhere ? "yes" : "no", failing);
  rep.require("nodal.normalization_not_open", !nu_open.open_everywhere);
  rep.require("nodal.X_open", openness(f).open_everywhere);

  const int bar_components = components(fiber_product(f, nu, cap).product).component_count;
  rep.add("nodal.XxCbar.components", std::to_string(bar_components));
  rep.require("nodal.XxCbar.expected", bar_components == n + m - 1, "n+m-1=" + std::to_string(n + m - 1));
  rep.require("nodal.XxCbar.disconnected_iff_n+m>2", (bar_components > 1) == (n + m > 2));

  const int square = components(fiber_product(f, f, cap).product).component_count;
  rep.add("nodal.XxX.components", std::to_string(square));
  const FoldedCore core = fold(induced_hom(f, kGlueVertex));
  rep.add("nodal.fold.index", core.index ? std::to_string(*core.index) : "inf");
  rep.add("nodal.fold.surjective", core.surjective ? "yes" : "no");
  const bool coprime = std::gcd(n, m) == 1;
  rep.require("nodal.surjective_iff_coprime", core.surjective == coprime, "gcd=" + std::to_string(std::gcd(n, m)));
  rep.require("nodal.surjective_iff_square_connected", core.surjective == (square == 1));

  const EtaleFactorization fac = etale_factorization(f, kGlueVertex);
  rep.add("nodal.factor.degree", std::to_string(fac.degree));
  rep.require("nodal.factor.composite", compose(fac.to_cover, fac.cover) == f);
  rep.require("nodal.factor.cover", is_cover(fac.cover));
  rep.require("nodal.factor.connected_over_cover",
              components(fiber_product(fac.to_cover, fac.to_cover, cap).product).component_count == 1);

  ConditionsConfig cfg;
  cfg.cap = cap;
  cfg.probes.push_back(cycle_cover(n));
  cfg.probes.push_back(cycle_cover(m));
  rep.merge(conditions_report(run_conditions(f, cfg)), "nodal.");
  return rep;
}

Report quotient_report(const QuotientScenario& s) {
  Report rep;
  const std::string n = std::to_string(s.n);
  rep.add("quotient.order.G", std::to_string(s.order_g), "A_" + n);
  rep.add("quotient.order.H", std::to_string(s.order_h), "A_" + std::to_string(s.n - 1));
  rep.add("quotient.order.K", std::to_string(s.order_k), "C_" + n);
  rep.add("quotient.double_cosets", std::to_string(s.double_coset_count));
  rep.require("quotient.square_connected", s.square_connected);
  rep.require("quotient.g_h1_surjective", s.g_h1_surjective);
  rep.require("quotient.g_prime_not_h1_surjective", !s.g_prime_h1_surjective);
  for (const auto& [m, surj] : s.g_prime_mod_m) {
    rep.require("quotient.g_prime_not_surjective_mod_" + std::to_string(m), !surj);
  }
  return rep;
}

}  // namespace uom
