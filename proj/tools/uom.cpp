// uom: command-line front end for the graph models of open maps of curves.
// Reports go to stdout, diagnostics to stderr. Exit 0 when the report has no
// FAIL line, 1 when it has one, 2 on usage, input or domain errors.
#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "uom/document.hpp"
#include "uom/fiber.hpp"
#include "uom/lifting.hpp"
#include "uom/monodromy.hpp"
#include "uom/nodal.hpp"
#include "uom/pi1.hpp"
#include "uom/random.hpp"
#include "uom/conditions.hpp"

using namespace uom;

namespace {

// Bases up to 8 vertices, sources up to 40, a third factoring through a cover.
const RandomOpenConfig kRandomConfig{1, 8, 4, 5, 40, 3, 3};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Document load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void write_doc(const std::string& path, const Document& doc) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << emit(doc);
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::string padded(std::size_t i, std::size_t count) {
  std::string s = std::to_string(i);
  const std::size_t width = std::to_string(count ? count - 1 : 0).size();
  return std::string(width > s.size() ? width - s.size() : 0, '0') + s;
}

std::string word_text(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::string(w[i] > 0 ? "+" : "") + std::to_string(w[i]);
  return s;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::vector<int> need_walk(const std::string& text) {
  auto w = parse_walk(text);
  if (!w) throw UsageError("bad walk '" + text + "'");
  return *w;
}

int need_vertex(const Graph& g, int v, const char* what) {
  if (v < 0 || v >= g.vertex_count()) throw UsageError(std::string(what) + " vertex out of range");
  return v;
}

struct Options {
  std::string file;
  std::string map;
  std::string map2;
  std::string graph;
  std::string walk;
  std::string emit_path;
  std::vector<std::string> perms;
  std::vector<std::string> probes;
  std::vector<std::int64_t> moduli;
  std::int64_t cap = kDefaultPairCap;
  std::uint64_t seed = 0;
  int n = 2;
  int m = 3;
  int base = 0;
  int start = 0;
  int end = 0;
  int random_count = 0;
};

Report cmd_validate(const Options& o) {
  const Document doc = load(o.file);
  Report r;
  for (const auto& [name, g] : doc.graphs) {
    r.add("graph." + name + ".vertices", std::to_string(g.vertex_count()));
    r.add("graph." + name + ".edges", std::to_string(g.edge_count()));
    r.add("graph." + name + ".components", std::to_string(components(g).component_count));
  }
  for (const auto& nm : doc.morphisms) {
    const auto v = check_morphism(nm.morphism);
    r.require("morphism." + nm.name + ".valid", !v, v ? v->message : "");
    r.add("morphism." + nm.name + ".open", yes(openness(nm.morphism).open_everywhere));
    r.add("morphism." + nm.name + ".subdivided", yes(nm.morphism.source.edge_count() != nm.spec.source.edge_count()));
  }
  return r;
}

Report cmd_components(const Options& o) {
  const Document doc = load(o.file);
  const Graph& g = doc.graph(o.graph);
  const auto lab = components(g);
  Report r;
  r.add("components.count", std::to_string(lab.component_count));
  for (int c = 0; c < lab.component_count; ++c) {
    std::vector<int> vs;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (lab.labels[v] == c) vs.push_back(v);
    }
    r.add("components." + padded(c, lab.component_count), std::to_string(vs.size()), "vertices=" + join(vs));
  }
  return r;
}

Report cmd_fiber_product(const Options& o) {
  const Document doc = load(o.file);
  const auto& f = doc.morphism(o.map);
  const auto& g = doc.morphism(o.map2);
  const FiberProduct p = fiber_product(f.morphism, g.morphism, o.cap);
  Report r;
  r.add("product.vertices", std::to_string(p.product.vertex_count()));
  r.add("product.edges", std::to_string(p.product.edge_count()));
  r.add("product.components", std::to_string(components(p.product).component_count));
  r.require("product.projections_valid", !check_morphism(p.proj_left) && !check_morphism(p.proj_right));
  if (!o.emit_path.empty()) {
    // Subdivided maps have their own source graphs; name them after the map.
    Document out;
    const std::string pname = f.name + "_x_" + g.name;
    const std::string left = f.name + "_src", right = g.name + "_src";
    out.add_graph(left, f.morphism.source);
    if (f.name != g.name) out.add_graph(right, g.morphism.source);
    out.add_graph(pname, p.product);
    out.add_morphism(pname + "_p1", pname, left, p.proj_left);
    out.add_morphism(pname + "_p2", pname, f.name == g.name ? left : right, p.proj_right);
    write_doc(o.emit_path, out);
  }
  return r;
}

Report cmd_fiber_power(const Options& o) {
  const Document doc = load(o.file);
  const auto& f = doc.morphism(o.map);
  const FiberPower p = fiber_power(f.morphism, o.n, o.cap);
  const auto lab = components(p.power);
  Report r;
  r.add("power.n", std::to_string(p.n));
  r.add("power.vertices", std::to_string(p.power.vertex_count()));
  r.add("power.edges", std::to_string(p.power.edge_count()));
  r.add("power.components", std::to_string(lab.component_count));
  if (!p.diagonal_vertices.empty()) {
    std::vector<int> comps;
    for (int v : p.diagonal_vertices) comps.push_back(lab.labels[v]);
    std::sort(comps.begin(), comps.end());
    comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
    r.add("power.diagonal_components", std::to_string(comps.size()), "components=" + join(comps));
  }
  if (!o.emit_path.empty()) {
    Document out;
    out.add_graph("power", p.power);
    write_doc(o.emit_path, out);
  }
  return r;
}

Report cmd_open_check(const Options& o) {
  const Document doc = load(o.file);
  const Morphism& m = doc.morphism(o.map).morphism;
  const auto rep = openness(m);
  Report r;
  r.add("open", yes(rep.open_everywhere));
  r.add("cover", yes(is_cover(m)));
  r.add("surjective", yes(is_surjective(m)));
  for (std::size_t i = 0; i < rep.failures.size(); ++i) {
    r.add("open.failure." + padded(i, rep.failures.size()), "vertex=" + std::to_string(rep.failures[i].first),
          "unhit_dart=" + std::to_string(rep.failures[i].second));
  }
  return r;
}

Report cmd_pi1_image(const Options& o) {
  const Document doc = load(o.file);
  const Morphism& m = doc.morphism(o.map).morphism;
  need_vertex(m.source, o.base, "base");
  const InducedHom h = induced_hom(m, o.base);
  const FoldedCore core = fold(h);
  Report r;
  r.add("pi1.source_rank", std::to_string(h.source.rank));
  r.add("pi1.target_rank", std::to_string(h.target.rank));
  for (std::size_t j = 0; j < h.words.size(); ++j) {
    r.add("pi1.image." + padded(j, h.words.size()), word_text(h.words[j]));
  }
  r.add("fold.core_vertices", std::to_string(core.vertex_count));
  r.add("fold.index", core.index ? std::to_string(*core.index) : "inf");
  r.add("fold.surjective", yes(core.surjective));
  return r;
}

Report cmd_h1_map(const Options& o) {
  const Document doc = load(o.file);
  const Morphism& m = doc.morphism(o.map).morphism;
  need_vertex(m.source, o.base, "base");
  const IntMatrix a = h1_matrix(induced_hom(m, o.base));
  std::string inv;
  for (auto x : smith_invariants(a)) inv += (inv.empty() ? "" : ",") + std::to_string(x);
  Report r;
  r.add("h1.rows", std::to_string(a.rows));
  r.add("h1.cols", std::to_string(a.cols));
  r.add("h1.invariants", inv.empty() ? "-" : inv);
  r.add("h1.surjective", yes(h1_surjective(a)));
  for (auto mod : o.moduli) r.add("h1.mod." + std::to_string(mod), yes(h1_mod_m_surjective(a, mod)));
  return r;
}

Report cmd_factor(const Options& o) {
  const Document doc = load(o.file);
  const auto& nm = doc.morphism(o.map);
  const Morphism& m = nm.morphism;
  need_vertex(m.source, o.base, "base");
  const EtaleFactorization fac = etale_factorization(m, o.base);
  Report r;
  r.add("factor.degree", std::to_string(fac.degree));
  r.add("factor.cover_vertices", std::to_string(fac.cover.source.vertex_count()));
  r.require("factor.composite", compose(fac.to_cover, fac.cover) == m);
  r.require("factor.is_cover", is_cover(fac.cover));
  r.require("factor.degree_matches", fac.cover.source.vertex_count() == fac.degree * m.target.vertex_count());
  const int c = components(fiber_product(fac.to_cover, fac.to_cover, o.cap).product).component_count;
  r.require("factor.square_connected", c == 1, "components=" + std::to_string(c));
  if (!o.emit_path.empty()) {
    Document out;
    const std::string x = nm.name + "_src", s = nm.target, sp = nm.name + "_cover";
    out.add_graph(x, m.source);
    out.add_graph(s, m.target);
    out.add_graph(sp, fac.cover.source);
    out.add_morphism(nm.name + "_to_cover", x, sp, fac.to_cover);
    out.add_morphism(nm.name + "_cover_map", sp, s, fac.cover);
    write_doc(o.emit_path, out);
  }
  return r;
}

Report cmd_lift(const Options& o) {
  const Document doc = load(o.file);
  const Morphism& m = doc.morphism(o.map).morphism;
  need_vertex(m.source, o.start, "start");
  const Walk w{m.vertex(o.start), need_walk(o.walk)};
  if (auto v = validate_walk(m.target, w)) throw Error(v->code, v->message);
  const LiftResult res = lift_walk(m, w, o.start);
  Report r;
  r.add("lift.ok", yes(res.ok()));
  if (res.ok()) {
    r.add("lift.walk", format_walk(res.lift->darts).empty() ? "-" : format_walk(res.lift->darts));
    r.add("lift.end", std::to_string(res.lift->end(m.source)));
  } else {
    const auto& ob = *res.obstruction;
    r.add("lift.obstruction", "step=" + std::to_string(ob.step),
          "vertex=" + std::to_string(ob.vertex) + " dart=" + std::to_string(ob.dart));
    r.add("lift.arc_liftable_at_obstruction", yes(arc_liftable_at(m, ob.vertex).liftable));
  }
  return r;
}

Report cmd_lift_2pt(const Options& o) {
  const Document doc = load(o.file);
  const Morphism& m = doc.morphism(o.map).morphism;
  need_vertex(m.source, o.start, "start");
  need_vertex(m.source, o.end, "end");
  const Walk w{m.vertex(o.start), need_walk(o.walk)};
  if (auto v = validate_walk(m.target, w)) throw Error(v->code, v->message);
  const auto lift = lift_with_endpoints(m, w, o.start, o.end);
  Report r;
  r.add("lift2.found", yes(lift.has_value()));
  if (lift) r.add("lift2.walk", lift->darts.empty() ? "-" : format_walk(lift->darts));
  return r;
}

Report cmd_pullback(const Options& o) {
  const Document doc = load(o.file);
  const Morphism& f = doc.morphism(o.map).morphism;
  need_vertex(f.source, o.base, "base");
  PermAction a{0, {}};
  for (const auto& text : o.perms) {
    Perm p;
    std::string spaced = text;
    std::replace(spaced.begin(), spaced.end(), ',', ' ');
    std::istringstream in(spaced);
    for (int x; in >> x;) p.push_back(x);
    if (!in.eof()) throw UsageError("bad permutation '" + text + "'");
    if (!a.perms.empty() && static_cast<int>(p.size()) != a.degree) throw UsageError("permutations differ in degree");
    a.degree = static_cast<int>(p.size());
    a.perms.push_back(std::move(p));
  }
  const auto pres = pi1(f.target, f.vertex(o.base));
  if (a.perms.empty()) a.degree = 1;
  if (static_cast<int>(a.perms.size()) != pres.rank) {
    throw Error(Errc::RankMismatch, "expected " + std::to_string(pres.rank) + " permutations");
  }
  const int orbits = pullback_orbit_count(f, a, o.base);
  const Morphism y = cover_graph(f.target, pres, a);
  const int comps = components(fiber_product(f, y, o.cap).product).component_count;
  Report r;
  r.add("pullback.degree", std::to_string(a.degree));
  r.add("pullback.transitive", yes(is_transitive(a)));
  r.add("pullback.orbits", std::to_string(orbits));
  r.require("pullback.orbits_match_components", orbits == comps, "components=" + std::to_string(comps));
  return r;
}

Report cmd_nodal(const Options& o) {
  if (o.n < 1 || o.m < 1) throw Error(Errc::NonPositive, "n and m must be positive");
  write_doc(o.emit_path, scenario_nodal(o.n, o.m));
  return nodal_report(o.n, o.m, o.cap);
}

Report cmd_quotient(const Options& o, std::size_t order_cap) {
  return quotient_report(quotient_scenario(o.n, order_cap));
}

Report cmd_thm12(const Options& o) {
  Report r;
  if (o.random_count > 0) {
    int agree = 0;
    for (int i = 0; i < o.random_count; ++i) {
      Rng rng(o.seed + static_cast<std::uint64_t>(i));
      ConditionsConfig cfg;
      cfg.seed = o.seed + static_cast<std::uint64_t>(i);
      cfg.cap = o.cap;
      const auto res = run_conditions(random_open_morphism(rng, kRandomConfig), cfg);
      agree += res.agree() && res.growth_ok;
      r.merge(conditions_report(res), "trial." + padded(static_cast<std::size_t>(i), static_cast<std::size_t>(o.random_count)) + ".");
    }
    r.require("trials.agree", agree == o.random_count,
              std::to_string(agree) + "/" + std::to_string(o.random_count));
    return r;
  }
  if (o.file.empty() || o.map.empty()) throw UsageError("thm12 needs FILE MAP or --random COUNT");
  const Document doc = load(o.file);
  const Morphism& f = doc.morphism(o.map).morphism;
  if (auto v = hypothesis_violation(f)) {
    r.require("conditions.hypotheses", false, *v);
    return r;
  }
  ConditionsConfig cfg;
  cfg.seed = o.seed;
  cfg.cap = o.cap;
  for (const auto& name : o.probes) cfg.probes.push_back(doc.morphism(name).morphism);
  r.require("conditions.hypotheses", true);
  r.merge(conditions_report(run_conditions(f, cfg)));
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph models of open maps of curves: fiber products, pi_1 images, lifting."};
  app.require_subcommand(1);
  Options o;
  std::size_t order_cap = kDefaultOrderCap;
  Report report;
  std::function<Report()> run;

  auto file_arg = [&](CLI::App* c) { c->add_option("file", o.file, "input document")->required()->check(CLI::ExistingFile); };
  auto map_arg = [&](CLI::App* c) { c->add_option("map", o.map, "morphism name")->required(); };
  auto cap_opt = [&](CLI::App* c) { c->add_option("--cap", o.cap, "fiber product size guard (vertex pairs)")->check(CLI::PositiveNumber); };
  auto emit_opt = [&](CLI::App* c) { c->add_option("--emit", o.emit_path, "write the constructed objects to this path"); };
  auto base_opt = [&](CLI::App* c) { c->add_option("--base", o.base, "base vertex of the source"); };

  auto* c = app.add_subcommand("validate", "parse and validate a document");
  file_arg(c);
  c->callback([&] { run = [&] { return cmd_validate(o); }; });

  c = app.add_subcommand("components", "connected components of a graph");
  file_arg(c);
  c->add_option("graph", o.graph, "graph name")->required();
  c->callback([&] { run = [&] { return cmd_components(o); }; });

  c = app.add_subcommand("fiber-product", "fiber product of two maps to the same target");
  file_arg(c);
  map_arg(c);
  c->add_option("map2", o.map2, "second morphism name")->required();
  cap_opt(c);
  emit_opt(c);
  c->callback([&] { run = [&] { return cmd_fiber_product(o); }; });

  c = app.add_subcommand("fiber-power", "n-fold fiber power of a map");
  file_arg(c);
  map_arg(c);
  c->add_option("--n", o.n, "number of factors")->required();
  cap_opt(c);
  emit_opt(c);
  c->callback([&] { run = [&] { return cmd_fiber_power(o); }; });

  c = app.add_subcommand("open-check", "star surjectivity at every source vertex");
  file_arg(c);
  map_arg(c);
  c->callback([&] { run = [&] { return cmd_open_check(o); }; });

  c = app.add_subcommand("pi1-image", "image of pi_1 by folding");
  file_arg(c);
  map_arg(c);
  base_opt(c);
  c->callback([&] { run = [&] { return cmd_pi1_image(o); }; });

  c = app.add_subcommand("h1-map", "induced map on H_1, over Z and mod m");
  file_arg(c);
  map_arg(c);
  base_opt(c);
  c->add_option("--mod", o.moduli, "moduli to test (repeatable)")->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 62));
  c->callback([&] { run = [&] { return cmd_h1_map(o); }; });

  c = app.add_subcommand("factor", "etale factorization X -> S' -> S");
  file_arg(c);
  map_arg(c);
  base_opt(c);
  cap_opt(c);
  emit_opt(c);
  c->callback([&] { run = [&] { return cmd_factor(o); }; });

  c = app.add_subcommand("lift", "lift a target walk from a source vertex");
  file_arg(c);
  map_arg(c);
  c->add_option("--start", o.start, "source vertex")->required();
  c->add_option("--walk", o.walk, "target walk as +e/-e entries, e.g. +0,-1");
  c->callback([&] { run = [&] { return cmd_lift(o); }; });

  c = app.add_subcommand("lift-2pt", "lift a target walk with both endpoints prescribed");
  file_arg(c);
  map_arg(c);
  c->add_option("--start", o.start, "source start vertex")->required();
  c->add_option("--end", o.end, "source end vertex")->required();
  c->add_option("--walk", o.walk, "target walk as +e/-e entries");
  c->callback([&] { run = [&] { return cmd_lift_2pt(o); }; });

  c = app.add_subcommand("pullback", "orbits of pi_1(X) on the fiber of a cover of the target");
  file_arg(c);
  map_arg(c);
  base_opt(c);
  c->add_option("--perm", o.perms, "image of a target generator, as \"1 2 0\" or 1,2,0 (one per generator)");
  cap_opt(c);
  c->callback([&] { run = [&] { return cmd_pullback(o); }; });

  auto* scen = app.add_subcommand("scenario", "built-in scenarios");
  scen->require_subcommand(1);
  c = scen->add_subcommand("nodal", "covers of a nodal rational curve glued at a point");
  c->add_option("--n", o.n, "degree of the first cycle cover")->required();
  c->add_option("--m", o.m, "degree of the second cycle cover")->required();
  cap_opt(c);
  emit_opt(c);
  c->callback([&] { run = [&] { return cmd_nodal(o); }; });
  c = scen->add_subcommand("quotient", "alternating group quotient diagram");
  c->add_option("--n", o.n, "odd degree, at least 7")->required();
  c->add_option("--cap", order_cap, "group order cap")->check(CLI::PositiveNumber);
  c->callback([&] { run = [&] { return cmd_quotient(o, order_cap); }; });

  c = app.add_subcommand("thm12", "the six conditions for pi_1-surjectivity");
  c->add_option("file", o.file, "input document")->check(CLI::ExistingFile);
  c->add_option("map", o.map, "morphism name");
  c->add_option("--probe", o.probes, "extra open map to the same target (repeatable)");
  c->add_option("--random", o.random_count, "run on this many random open maps instead")->check(CLI::PositiveNumber);
  c->add_option("--seed", o.seed, "seed for random probes and maps");
  cap_opt(c);
  c->callback([&] { run = [&] { return cmd_thm12(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    report = run();
  } catch (const ParseError& e) {
    std::cerr << "error: " << o.file << ": " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  std::cout << report.str();
  return report.failed() ? 1 : 0;
}
