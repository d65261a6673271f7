#include "doctest.h"

#include <algorithm>
#include <map>

#include "helpers.hpp"
#include "oracles.hpp"
#include "uom/fiber.hpp"
#include "uom/nodal.hpp"
#include "uom/pi1.hpp"
#include "uom/random.hpp"

using namespace uom;
using uom::testing::error_code;

namespace {

std::vector<int> component_sizes(const Graph& g) {
  const auto c = components(g);
  std::vector<int> sizes(c.component_count, 0);
  for (int l : c.labels) ++sizes[l];
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

RandomOpenConfig small() { return RandomOpenConfig{1, 4, 2, 3, 12, 2}; }

}  // namespace

TEST_CASE("base change by the identity returns the source") {
  const Morphism f = glued_cover(2, 3);
  const FiberProduct p = fiber_product(f, identity(f.target));
  CHECK(p.product == f.source);
  CHECK(p.proj_left == identity(f.source));
}

TEST_CASE("X_{2,3} over the normalization") {
  const FiberProduct p = fiber_product(glued_cover(2, 3), normalization());
  // One wedge of two intervals (5 vertices) and n+m-2 = 3 intervals.
  CHECK(components(p.product).component_count == 4);
  CHECK(component_sizes(p.product) == std::vector<int>{3, 3, 3, 5});
}

TEST_CASE("C_2 over C with itself") {
  // Oracle: the diagonal shift (i, j) -> (i+1, j+1) on Z/2 x Z/2 has 2 orbits.
  CHECK(oracle::orbits(4, {{3, 2, 1, 0}}) == 2);
  const Morphism c2 = cycle_cover(2);
  CHECK(components(fiber_product(c2, c2).product).component_count == 2);
}

TEST_CASE("fiber product structure on random pairs") {
  Rng rng(21);
  for (int i = 0; i < 150; ++i) {
    const Morphism f = random_open_morphism(rng, small());
    Morphism g = random_open_morphism(rng, f.target, small());
    if (i % 3 == 0 && g.source.edge_count() > 0) g = testing::drop_edge(g, 0);
    const FiberProduct p = fiber_product(f, g);
    CHECK(p.product.vertex_count() == fiber_pair_count(f, g));
    CHECK_FALSE(validate(p.product).has_value());
    CHECK_FALSE(check_morphism(p.proj_left).has_value());
    CHECK_FALSE(check_morphism(p.proj_right).has_value());
    CHECK(compose(p.proj_left, f) == p.to_base);
    CHECK(compose(p.proj_right, g) == p.to_base);
    CHECK(std::is_sorted(p.vertex_pairs.begin(), p.vertex_pairs.end()));

    const int c = components(p.product).component_count;
    CHECK(c == oracle::product_components(f, g));
    CHECK(c == components(fiber_product(g, f).product).component_count);
    if (openness(g).open_everywhere) {
      CHECK(openness(p.proj_left).open_everywhere);
      CHECK(openness(p.proj_right).open_everywhere);
    }
  }
}

TEST_CASE("fiber product errors") {
  const Morphism f = glued_cover(2, 3);
  CHECK(error_code([&] { fiber_product(f, identity(f.source)); }) == Errc::TargetMismatch);
  CHECK(error_code([&] { fiber_product(f, f, 10); }) == Errc::SizeGuard);
  CHECK(error_code([&] { fiber_power(f, 0); }) == Errc::NonPositiveN);
}

TEST_CASE("fiber powers") {
  const Morphism x22 = glued_cover(2, 2);
  const Morphism x23 = glued_cover(2, 3);
  CHECK(fiber_power(x22, 1).power == x22.source);
  CHECK(components(fiber_power(x22, 2).power).component_count == 2);
  CHECK(components(fiber_power(x22, 4).power).component_count >= 4);
  CHECK(oracle::product_components({&x22, &x22, &x22}) == components(fiber_power(x22, 3).power).component_count);
  for (int n = 2; n <= 4; ++n) CHECK(components(fiber_power(x23, n).power).component_count == 1);
  CHECK(oracle::product_components({&x23, &x23, &x23}) == 1);
}

TEST_CASE("fiber power matches the right-nested product") {
  Rng rng(22);
  for (int i = 0; i < 40; ++i) {
    const Morphism f = random_open_morphism(rng, small());
    FiberPower right = fiber_power(f, 1);
    for (int n = 2; n <= 4; ++n) {
      const FiberPower left = fiber_power(f, n);
      // Right-nested: X x_S (X x_S ( ... )).
      const FiberProduct nested = fiber_product(f, right.to_base);
      REQUIRE(nested.product.vertex_count() == left.power.vertex_count());
      REQUIRE(nested.product.dart_count() == left.power.dart_count());
      std::map<std::vector<int>, int> left_vertex, left_dart;
      for (int v = 0; v < left.power.vertex_count(); ++v) left_vertex[left.vertex_tuples[v]] = v;
      for (int d = 0; d < left.power.dart_count(); ++d) left_dart[left.dart_tuples[d]] = d;
      bool iso = true;
      std::vector<int> dart_image(nested.product.dart_count());
      for (int d = 0; d < nested.product.dart_count(); ++d) {
        const auto [x, rest] = nested.dart_pairs[d];
        std::vector<int> t{x};
        t.insert(t.end(), right.dart_tuples[rest].begin(), right.dart_tuples[rest].end());
        dart_image[d] = left_dart.at(t);
      }
      for (int d = 0; d < nested.product.dart_count(); ++d) {
        const auto [x, rest] = nested.vertex_pairs[nested.product.origin(d)];
        std::vector<int> t{x};
        t.insert(t.end(), right.vertex_tuples[rest].begin(), right.vertex_tuples[rest].end());
        iso &= left.power.origin(dart_image[d]) == left_vertex.at(t);
        iso &= left.power.partner(dart_image[d]) == dart_image[nested.product.partner(d)];
      }
      CHECK(iso);
      CHECK(components(left.power).component_count == components(nested.product).component_count);
      for (const auto& p : left.projections) CHECK_FALSE(check_morphism(p).has_value());

      // Rebuild `right` as an n-fold power with tuples (x, rest...).
      FiberPower next;
      next.power = nested.product;
      next.to_base = nested.to_base;
      for (const auto& [x, rest] : nested.vertex_pairs) {
        std::vector<int> t{x};
        t.insert(t.end(), right.vertex_tuples[rest].begin(), right.vertex_tuples[rest].end());
        next.vertex_tuples.push_back(t);
      }
      for (const auto& [x, rest] : nested.dart_pairs) {
        std::vector<int> t{x};
        t.insert(t.end(), right.dart_tuples[rest].begin(), right.dart_tuples[rest].end());
        next.dart_tuples.push_back(t);
      }
      right = std::move(next);
    }
  }
}

TEST_CASE("diagonal component") {
  SUBCASE("identity") {
    const Graph g = glued_cover(2, 3).source;
    const auto d = diagonal_component(identity(g));
    CHECK(d.subgraph.graph == g);
  }
  SUBCASE("double cover of the 2-gon") {
    const auto d = diagonal_component(cycle_cover(2));
    CHECK(d.labeling.component_count == 2);
    CHECK(d.subgraph.graph.vertex_count() == 4);
    CHECK(d.subgraph.graph.edge_count() == 4);
    // Four vertices, all diagonal: the component is the diagonal copy of C_2.
    for (int v : d.subgraph.vertices) CHECK(d.square.vertex_pairs[v].first == d.square.vertex_pairs[v].second);
    for (int v = 0; v < 4; ++v) CHECK(d.subgraph.graph.star(v).size() == 2);
    CHECK(components(d.subgraph.graph).component_count == 1);
  }
  SUBCASE("pi_1-surjective map") {
    const auto d = diagonal_component(glued_cover(2, 3));
    CHECK(d.labeling.component_count == 1);
    CHECK(d.subgraph.graph == d.square.product);
  }
  SUBCASE("disconnected source") {
    const Graph c = nodal_curve();
    const Morphism two_copies = cover_from_permutations(c, pi1(c, 0), 2, std::vector<std::vector<int>>{{0, 1}});
    CHECK(error_code([&] { diagonal_component(two_copies); }) == Errc::DisconnectedSource);
  }
  SUBCASE("connected sources never raise") {
    Rng rng(23);
    for (int i = 0; i < 100; ++i) CHECK_NOTHROW(diagonal_component(random_open_morphism(rng, small())));
  }
}

TEST_CASE("f is open iff X x_S X -> S is open") {
  Rng rng(24);
  int non_open = 0;
  for (int i = 0; i < 200; ++i) {
    Morphism f = random_open_morphism(rng, small());
    if (i % 2 && f.source.edge_count() > 0) f = testing::drop_edge(f, uniform_int(rng, 0, f.source.edge_count() - 1));
    const bool open = openness(f).open_everywhere;
    non_open += !open;
    CHECK(openness(fiber_product(f, f).to_base).open_everywhere == open);
  }
  CHECK(non_open > 20);
  CHECK_FALSE(openness(fiber_product(normalization(), normalization()).to_base).open_everywhere);
}
