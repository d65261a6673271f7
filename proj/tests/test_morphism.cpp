#include "doctest.h"

#include "helpers.hpp"
#include "uom/morphism.hpp"
#include "uom/nodal.hpp"
#include "uom/pi1.hpp"
#include "uom/random.hpp"

using namespace uom;
using uom::testing::error_code;

TEST_CASE("check_morphism") {
  SUBCASE("identity") {
    CHECK_FALSE(check_morphism(identity(glued_cover(2, 3).source)).has_value());
  }
  SUBCASE("partners sent to non-partners") {
    Morphism m = identity(nodal_curve());
    m.dart_map = {0, 2, 1, 3};
    auto v = check_morphism(m);
    REQUIRE(v);
    CHECK(v->code == Errc::InvolutionMismatch);
  }
  SUBCASE("origin disagreement") {
    Morphism m = identity(nodal_curve());
    m.vertex_map = {1, 0};
    auto v = check_morphism(m);
    REQUIRE(v);
    CHECK(v->code == Errc::OriginMismatch);
  }
  SUBCASE("degree-2 winding of the 2-gon") {
    // 4-cycle 0->1->2->3->0 over the 2-gon w=0, c=1.
    Graph c2(4);
    for (int k = 0; k < 4; ++k) c2.add_edge(k, (k + 1) % 4);
    const Morphism m{c2, nodal_curve(), {0, 1, 0, 1}, {0, 1, 2, 3, 0, 1, 2, 3}};
    CHECK_FALSE(check_morphism(m).has_value());
    CHECK(m == cycle_cover(2));
  }
}

TEST_CASE("openness") {
  SUBCASE("covers are open") {
    for (int n = 1; n <= 5; ++n) CHECK(openness(cycle_cover(n)).open_everywhere);
  }
  SUBCASE("normalization fails at both ends") {
    const auto r = openness(normalization());
    CHECK_FALSE(r.open_everywhere);
    // a (0) misses the dart leaving w along edge 1 backwards; b (2) misses edge 0.
    CHECK(r.failures == std::vector<std::pair<int, int>>{{0, 3}, {2, 0}});
  }
  SUBCASE("glued cover is open; its glue vertex has four darts over two") {
    const Morphism f = glued_cover(2, 3);
    CHECK(openness(f).open_everywhere);
    CHECK(f.source.star(kGlueVertex).size() == 4);
    CHECK(f.target.star(f.vertex(kGlueVertex)).size() == 2);
  }
}

TEST_CASE("is_cover") {
  CHECK(is_cover(cycle_cover(4)));
  CHECK_FALSE(is_cover(glued_cover(2, 3)));
  CHECK(is_cover(identity(glued_cover(2, 3).source)));
  CHECK_FALSE(is_cover(normalization()));
}

TEST_CASE("subdivide_to_simplicial") {
  SUBCASE("length-one walks leave the map alone") {
    const Morphism f = glued_cover(2, 3);
    MapSpec spec{f.source, f.target, f.vertex_map, {}};
    for (int e = 0; e < f.source.edge_count(); ++e) spec.edge_walks.push_back({f.dart(positive_dart(e))});
    const auto s = subdivide_to_simplicial(spec);
    CHECK(s.morphism == f);
  }
  SUBCASE("a loop around a loop twice becomes the double cover") {
    Graph loop(1);
    loop.add_edge(0, 0);
    const MapSpec spec{loop, loop, {0}, {{0, 0}}};
    const auto s = subdivide_to_simplicial(spec);
    CHECK(s.morphism.source.vertex_count() == 2);
    CHECK(s.morphism.source.edge_count() == 2);
    CHECK_FALSE(check_morphism(s.morphism).has_value());
    CHECK(is_cover(s.morphism));
    CHECK(components(s.morphism.source).component_count == 1);
    CHECK(s.edge_pieces[0] == std::vector<int>{0, 1});
    CHECK(s.new_vertices[0] == std::vector<int>{1});
  }
  SUBCASE("a length-three walk adds two vertices") {
    Graph edge(2);
    edge.add_edge(0, 1);
    // 0 -> 1 onto the walk w -> c -> w -> c in the 2-gon.
    const MapSpec spec{edge, nodal_curve(), {0, 1}, {{0, 2, 0}}};
    const auto s = subdivide_to_simplicial(spec);
    CHECK(s.morphism.source.vertex_count() == 4);
    CHECK(s.morphism.source.edge_count() == 3);
    CHECK(s.morphism.vertex_map == std::vector<int>{0, 1, 1, 0});
    CHECK_FALSE(check_morphism(s.morphism).has_value());
  }
  SUBCASE("collapsed edges are rejected") {
    Graph edge(2);
    edge.add_edge(0, 1);
    const MapSpec spec{edge, nodal_curve(), {0, 0}, {{}}};
    CHECK(error_code([&] { subdivide_to_simplicial(spec); }) == Errc::CollapsedEdge);
  }
  SUBCASE("walk endpoints must match the vertex map") {
    Graph edge(2);
    edge.add_edge(0, 1);
    const MapSpec spec{edge, nodal_curve(), {0, 0}, {{0}}};
    CHECK(error_code([&] { subdivide_to_simplicial(spec); }) == Errc::WalkMismatch);
  }
}

TEST_CASE("open maps onto connected targets are surjective") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Morphism f = random_open_morphism(rng);
    REQUIRE(openness(f).open_everywhere);
    CHECK(is_surjective(f));
  }
}

TEST_CASE("covers are open") {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const Graph base = random_connected_graph(rng, uniform_int(rng, 1, 5), uniform_int(rng, 0, 3));
    const auto pres = pi1(base, 0);
    const int d = uniform_int(rng, 1, 4);
    const Morphism c = cover_from_permutations(base, pres, d, random_action(rng, d, pres.rank).perms);
    CHECK(is_cover(c));
    CHECK(openness(c).open_everywhere);
  }
}

TEST_CASE("openness is stable under subdivision") {
  Rng rng(13);
  for (int i = 0; i < 150; ++i) {
    Morphism f = random_open_morphism(rng);
    if (i % 2 == 1 && f.source.edge_count() > 0) f = testing::drop_edge(f, uniform_int(rng, 0, f.source.edge_count() - 1));
    const Morphism refined = subdivide_target(f);
    REQUIRE_FALSE(check_morphism(refined).has_value());
    CHECK(openness(refined).open_everywhere == openness(f).open_everywhere);
    CHECK(is_cover(refined) == is_cover(f));
  }
  CHECK_FALSE(openness(subdivide_target(normalization())).open_everywhere);
}

TEST_CASE("composites of open maps are open") {
  Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    const Morphism g = random_open_morphism(rng, RandomOpenConfig{1, 4, 2, 3, 12, 2});
    const Morphism f = random_open_morphism(rng, g.source, RandomOpenConfig{1, 4, 2, 3, 36, 2});
    const Morphism h = compose(f, g);
    CHECK_FALSE(check_morphism(h).has_value());
    CHECK(openness(h).open_everywhere);
  }
}
