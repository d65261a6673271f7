#pragma once

// Named graphs and maps as read from, or written to, the text format:
//
//   graph <name> vertices <k>
//   edge <name>.<eid> <u> <v>
//   morphism <mname> : <X> -> <S>
//   vmap <mname> <x> <s>
//   emap <mname> <eid> <+-eid>[,<+-eid>...]
//
// Edges of a graph are declared in id order. A walk entry +e is the positive
// dart of edge e, -e the negative one. '#' starts a comment.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uom/graph.hpp"
#include "uom/morphism.hpp"

namespace uom {

struct NamedGraph {
  std::string name;
  Graph graph;

  friend bool operator==(const NamedGraph&, const NamedGraph&) = default;
};

struct NamedMorphism {
  std::string name;
  std::string source;
  std::string target;
  MapSpec spec;       // as written
  Morphism morphism;  // after subdivision; equals spec when all walks have length 1

  friend bool operator==(const NamedMorphism&, const NamedMorphism&) = default;
};

struct Document {
  std::vector<NamedGraph> graphs;
  std::vector<NamedMorphism> morphisms;

  const Graph& graph(std::string_view name) const;
  const NamedMorphism& morphism(std::string_view name) const;
  bool has_graph(std::string_view name) const;
  bool has_morphism(std::string_view name) const;

  void add_graph(std::string name, Graph g);
  /// Registers a simplicial map between graphs already in the document.
  void add_morphism(std::string name, std::string source, std::string target, const Morphism& m);

  friend bool operator==(const Document&, const Document&) = default;
};

/// Error raised while reading the text format; line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(Errc code, int line, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

Document parse(std::string_view text);
std::string emit(const Document& doc);

/// "+0,-3" -> darts {0, 7}. Empty text is the empty walk; nullopt on bad syntax.
std::optional<std::vector<int>> parse_walk(std::string_view text);
std::string format_walk(const std::vector<int>& darts);

}  // namespace uom
