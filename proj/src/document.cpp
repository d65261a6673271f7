#include "uom/document.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

namespace uom {

namespace {

template <typename Range>
auto find_named(Range& items, std::string_view name) {
  return std::find_if(items.begin(), items.end(), [&](const auto& item) { return item.name == name; });
}

bool valid_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

std::optional<long long> to_int(std::string_view s) {
  long long value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

std::optional<std::vector<int>> parse_walk(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    if (item.empty()) return std::nullopt;
    const bool negative = item[0] == '-';
    if (item[0] == '+' || item[0] == '-') item.remove_prefix(1);
    const auto e = to_int(item);
    if (!e || *e < 0 || *e > std::numeric_limits<int>::max() / 2 - 1) return std::nullopt;
    out.push_back(static_cast<int>(2 * *e + (negative ? 1 : 0)));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (comma != std::string_view::npos && text.empty()) return std::nullopt;
  }
  return out;
}

std::string format_walk(const std::vector<int>& darts) {
  std::string out;
  for (std::size_t i = 0; i < darts.size(); ++i) {
    if (i) out += ',';
    out += darts[i] % 2 ? '-' : '+';
    out += std::to_string(darts[i] / 2);
  }
  return out;
}

const Graph& Document::graph(std::string_view name) const {
  auto it = find_named(graphs, name);
  if (it == graphs.end()) throw Error(Errc::UnknownName, "no graph named '" + std::string(name) + "'");
  return it->graph;
}

const NamedMorphism& Document::morphism(std::string_view name) const {
  auto it = find_named(morphisms, name);
  if (it == morphisms.end()) throw Error(Errc::UnknownName, "no morphism named '" + std::string(name) + "'");
  return *it;
}

bool Document::has_graph(std::string_view name) const { return find_named(graphs, name) != graphs.end(); }

bool Document::has_morphism(std::string_view name) const {
  return find_named(morphisms, name) != morphisms.end();
}

void Document::add_graph(std::string name, Graph g) {
  if (!valid_name(name)) throw Error(Errc::ValidationFailure, "invalid name '" + name + "'");
  if (has_graph(name) || has_morphism(name)) throw Error(Errc::ValidationFailure, "duplicate name '" + name + "'");
  graphs.push_back({std::move(name), std::move(g)});
}

void Document::add_morphism(std::string name, std::string source, std::string target, const Morphism& m) {
  if (!valid_name(name)) throw Error(Errc::ValidationFailure, "invalid name '" + name + "'");
  if (has_graph(name) || has_morphism(name)) throw Error(Errc::ValidationFailure, "duplicate name '" + name + "'");
  if (!(graph(source) == m.source) || !(graph(target) == m.target)) {
    throw Error(Errc::ValidationFailure, "morphism '" + name + "' does not match its named graphs");
  }
  if (auto v = check_morphism(m)) throw Error(Errc::ValidationFailure, v->message);
  MapSpec spec{m.source, m.target, m.vertex_map, {}};
  for (int e = 0; e < m.source.edge_count(); ++e) spec.edge_walks.push_back({m.dart_map[positive_dart(e)]});
  morphisms.push_back({std::move(name), std::move(source), std::move(target), std::move(spec), m});
}

Document parse(std::string_view text) {
  struct Entry {
    int line;
    long long index;
    std::vector<long long> values;
  };
  struct PendingMorphism {
    std::string name, source, target;
    int line;
    std::vector<Entry> vmaps, emaps;
  };

  Document doc;
  std::vector<PendingMorphism> pending;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;

  auto fail = [&](Errc code, const std::string& what) -> ParseError { return ParseError(code, line_no, what); };
  auto need_int = [&](std::string_view tok) {
    auto v = to_int(tok);
    if (!v) throw fail(Errc::SyntaxError, "expected an integer, got '" + std::string(tok) + "'");
    return *v;
  };
  auto find_pending = [&](const std::string& name) -> PendingMorphism& {
    auto it = find_named(pending, name);
    if (it == pending.end()) throw fail(Errc::UnknownName, "unknown morphism '" + name + "'");
    return *it;
  };
  auto taken = [&](const std::string& name) { return doc.has_graph(name) || find_named(pending, name) != pending.end(); };

  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    const std::string& kw = tok[0];
    if (kw == "graph") {
      if (tok.size() != 4 || tok[2] != "vertices") throw fail(Errc::SyntaxError, "expected: graph <name> vertices <k>");
      if (!valid_name(tok[1])) throw fail(Errc::SyntaxError, "invalid name '" + tok[1] + "'");
      if (taken(tok[1])) throw fail(Errc::ValidationFailure, "duplicate name '" + tok[1] + "'");
      const long long k = need_int(tok[3]);
      if (k < 0) throw fail(Errc::ValidationFailure, "negative vertex count");
      doc.graphs.push_back({tok[1], Graph(static_cast<int>(k))});
    } else if (kw == "edge") {
      if (tok.size() != 4) throw fail(Errc::SyntaxError, "expected: edge <name>.<eid> <u> <v>");
      const auto dot = tok[1].rfind('.');
      if (dot == std::string::npos) throw fail(Errc::SyntaxError, "expected <name>.<eid>");
      const std::string name = tok[1].substr(0, dot);
      const long long eid = need_int(std::string_view(tok[1]).substr(dot + 1));
      const long long u = need_int(tok[2]);
      const long long v = need_int(tok[3]);
      auto it = find_named(doc.graphs, name);
      if (it == doc.graphs.end()) throw fail(Errc::UnknownName, "unknown graph '" + name + "'");
      Graph& g = it->graph;
      if (eid != g.edge_count()) {
        throw fail(Errc::SyntaxError, "edge " + std::to_string(eid) + " declared out of order, expected " +
                                          std::to_string(g.edge_count()));
      }
      if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count()) {
        throw fail(Errc::ValidationFailure, "edge endpoint out of range");
      }
      g.add_edge(static_cast<int>(u), static_cast<int>(v));
    } else if (kw == "morphism") {
      if (tok.size() != 6 || tok[2] != ":" || tok[4] != "->") {
        throw fail(Errc::SyntaxError, "expected: morphism <name> : <X> -> <S>");
      }
      if (!valid_name(tok[1])) throw fail(Errc::SyntaxError, "invalid name '" + tok[1] + "'");
      if (taken(tok[1])) throw fail(Errc::ValidationFailure, "duplicate name '" + tok[1] + "'");
      for (const auto* g : {&tok[3], &tok[5]}) {
        if (!doc.has_graph(*g)) throw fail(Errc::UnknownName, "unknown graph '" + *g + "'");
      }
      pending.push_back({tok[1], tok[3], tok[5], line_no, {}, {}});
    } else if (kw == "vmap") {
      if (tok.size() != 4) throw fail(Errc::SyntaxError, "expected: vmap <name> <x> <s>");
      find_pending(tok[1]).vmaps.push_back({line_no, need_int(tok[2]), {need_int(tok[3])}});
    } else if (kw == "emap") {
      if (tok.size() != 4) throw fail(Errc::SyntaxError, "expected: emap <name> <eid> <walk>");
      Entry entry{line_no, need_int(tok[2]), {}};
      const auto walk = parse_walk(tok[3]);
      if (!walk || walk->empty()) throw fail(Errc::SyntaxError, "bad walk '" + tok[3] + "'");
      entry.values.assign(walk->begin(), walk->end());
      find_pending(tok[1]).emaps.push_back(std::move(entry));
    } else {
      throw fail(Errc::SyntaxError, "unknown directive '" + kw + "'");
    }
  }

  for (auto& p : pending) {
    const Graph& src = doc.graph(p.source);
    const Graph& tgt = doc.graph(p.target);
    MapSpec spec{src, tgt, std::vector<int>(src.vertex_count(), -1), std::vector<std::vector<int>>(src.edge_count())};
    for (const auto& e : p.vmaps) {
      line_no = e.line;
      if (e.index < 0 || e.index >= src.vertex_count() || e.values[0] < 0 || e.values[0] >= tgt.vertex_count()) {
        throw fail(Errc::ValidationFailure, "vmap entry out of range");
      }
      if (spec.vertex_map[e.index] >= 0) throw fail(Errc::ValidationFailure, "vertex mapped twice");
      spec.vertex_map[e.index] = static_cast<int>(e.values[0]);
    }
    for (const auto& e : p.emaps) {
      line_no = e.line;
      if (e.index < 0 || e.index >= src.edge_count()) throw fail(Errc::ValidationFailure, "emap edge out of range");
      if (!spec.edge_walks[e.index].empty()) throw fail(Errc::ValidationFailure, "edge mapped twice");
      for (long long d : e.values) {
        if (d >= tgt.dart_count()) throw fail(Errc::ValidationFailure, "walk uses an edge the target lacks");
        spec.edge_walks[e.index].push_back(static_cast<int>(d));
      }
    }
    line_no = p.line;
    if (std::count(spec.vertex_map.begin(), spec.vertex_map.end(), -1) > 0) {
      throw fail(Errc::ValidationFailure, "morphism '" + p.name + "' leaves a vertex unmapped");
    }
    if (std::any_of(spec.edge_walks.begin(), spec.edge_walks.end(), [](const auto& w) { return w.empty(); })) {
      throw fail(Errc::ValidationFailure, "morphism '" + p.name + "' leaves an edge unmapped");
    }
    Morphism m;
    try {
      m = subdivide_to_simplicial(spec).morphism;
    } catch (const Error& e) {
      throw fail(Errc::ValidationFailure, "morphism '" + p.name + "': " + e.what());
    }
    if (auto v = check_morphism(m)) throw fail(Errc::ValidationFailure, v->message);
    doc.morphisms.push_back({p.name, p.source, p.target, std::move(spec), std::move(m)});
  }
  return doc;
}

std::string emit(const Document& doc) {
  std::ostringstream out;
  for (const auto& [name, g] : doc.graphs) {
    out << "graph " << name << " vertices " << g.vertex_count() << '\n';
    for (int e = 0; e < g.edge_count(); ++e) {
      out << "edge " << name << '.' << e << ' ' << g.origin(positive_dart(e)) << ' '
          << g.origin(negative_dart(e)) << '\n';
    }
  }
  for (const auto& m : doc.morphisms) {
    out << "morphism " << m.name << " : " << m.source << " -> " << m.target << '\n';
    for (std::size_t v = 0; v < m.spec.vertex_map.size(); ++v) {
      out << "vmap " << m.name << ' ' << v << ' ' << m.spec.vertex_map[v] << '\n';
    }
    for (std::size_t e = 0; e < m.spec.edge_walks.size(); ++e) {
      out << "emap " << m.name << ' ' << e << ' ' << format_walk(m.spec.edge_walks[e]) << '\n';
    }
  }
  return out.str();
}

}  // namespace uom
