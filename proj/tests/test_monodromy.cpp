#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "uom/fiber.hpp"
#include "uom/monodromy.hpp"
#include "uom/nodal.hpp"
#include "uom/pi1.hpp"
#include "uom/random.hpp"

using namespace uom;
using uom::testing::error_code;

namespace {

Graph rose(int rank) {
  Graph g(1);
  for (int j = 0; j < rank; ++j) g.add_edge(0, 0);
  return g;
}

// Right cosets Hx of h in g, and the action of g's generators on them.
PermAction coset_action(const PermGroup& g, const PermGroup& h) {
  const int n = static_cast<int>(g.order());
  UnionFind uf(n);
  for (int i = 0; i < n; ++i) {
    for (const auto& s : h.generators()) uf.unite(i, g.index_of(then(s, g.elements()[i])));
  }
  std::vector<int> coset(n, -1), slot(n, -1);
  int count = 0;
  for (int i = 0; i < n; ++i) {
    int& s = slot[uf.find(i)];
    if (s < 0) s = count++;
    coset[i] = s;
  }
  PermAction a{count, {}};
  for (const auto& s : g.generators()) {
    Perm p(count, -1);
    for (int i = 0; i < n; ++i) p[coset[i]] = coset[g.index_of(then(g.elements()[i], s))];
    a.perms.push_back(p);
  }
  return a;
}

std::size_t brute_double_cosets(const PermGroup& g, const PermGroup& h, const PermGroup& k) {
  std::set<std::set<Perm>> seen;
  for (const auto& x : g.elements()) {
    std::set<Perm> dc;
    for (const auto& a : h.elements()) {
      for (const auto& b : k.elements()) dc.insert(then(then(a, x), b));
    }
    seen.insert(dc);
  }
  return seen.size();
}

}  // namespace

TEST_CASE("permutation conventions") {
  const Perm p = perm_from_cycles(3, {{0, 1}});
  const Perm q = perm_from_cycles(3, {{1, 2}});
  // p first, then q: 0 -> 1 -> 2.
  CHECK(then(p, q) == Perm{2, 0, 1});
  CHECK(then(q, p) == Perm{1, 2, 0});
  CHECK(perm_power(perm_from_cycles(5, {{0, 1, 2, 3, 4}}), 5) == perm_identity(5));
  CHECK(perm_power(q, -1) == q);
  CHECK(error_code([] { perm_from_cycles(3, {{0, 1}, {1, 2}}); }) == Errc::InvalidAction);
}

TEST_CASE("cover_graph") {
  const Graph c = nodal_curve();
  const auto pres = pi1(c, 0);
  SUBCASE("degree one is the identity") {
    const Morphism m = cover_graph(c, pres, PermAction{1, {{0}}});
    CHECK(m == identity(c));
  }
  SUBCASE("an n-cycle gives the cycle cover") {
    for (int n = 1; n <= 6; ++n) {
      std::vector<int> cycle(n);
      std::iota(cycle.begin(), cycle.end(), 0);
      const Morphism m = cover_graph(c, pres, PermAction{n, {perm_from_cycles(n, {cycle})}});
      CHECK(m == cycle_cover(n));
    }
  }
  SUBCASE("the identity on three points gives three copies") {
    const Morphism m = cover_graph(c, pres, PermAction{3, {perm_identity(3)}});
    CHECK(is_cover(m));
    CHECK(components(m.source).component_count == 3);
  }
  SUBCASE("rank mismatch") {
    CHECK(error_code([&] { cover_graph(c, pres, PermAction{2, {}}); }) == Errc::RankMismatch);
    CHECK(error_code([&] { cover_graph(c, pres, PermAction{2, {{0, 0}}}); }) == Errc::InvalidAction);
  }
  SUBCASE("connected iff transitive; components are orbits") {
    Rng rng(41);
    for (int i = 0; i < 200; ++i) {
      const Graph base = random_connected_graph(rng, uniform_int(rng, 1, 5), uniform_int(rng, 0, 3));
      const auto p = pi1(base, 0);
      const PermAction a = random_action(rng, uniform_int(rng, 1, 6), p.rank);
      const Morphism m = cover_graph(base, p, a);
      CHECK(is_cover(m));
      const int comps = components(m.source).component_count;
      CHECK(comps == oracle::orbits(a.degree, a.perms));
      CHECK((comps == 1) == is_transitive(a));
    }
  }
}

TEST_CASE("pullback orbit counts") {
  const auto h23 = induced_hom(glued_cover(2, 3), kGlueVertex);
  CHECK(pullback_orbit_count(h23, PermAction{5, {perm_from_cycles(5, {{0, 1, 2, 3, 4}})}}) == 1);
  const auto h2 = induced_hom(cycle_cover(2), 1);
  CHECK(pullback_orbit_count(h2, PermAction{2, {perm_from_cycles(2, {{0, 1}})}}) == 2);
  CHECK(pullback_orbit_count(h23, PermAction{1, {{0}}}) == 1);

  const Graph c = nodal_curve();
  const Morphism two = cover_from_permutations(c, pi1(c, 0), 2, std::vector<std::vector<int>>{{0, 1}});
  CHECK(error_code([&] { pullback_orbit_count(two, PermAction{1, {{0}}}); }) == Errc::DisconnectedSource);
}

TEST_CASE("orbit counts equal fiber product components") {
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    const Morphism f = random_open_morphism(rng, RandomOpenConfig{1, 5, 3, 3, 15, 2});
    const auto h = induced_hom(f, 0);
    const PermAction a = random_action(rng, uniform_int(rng, 1, 6), h.target.rank);
    const Morphism y = cover_graph(f.target, h.target, a);
    CHECK(pullback_orbit_count(h, a) == components(fiber_product(f, y).product).component_count);
  }
}

TEST_CASE("pi_1-surjective iff every connected cover pulls back connected") {
  Rng rng(43);
  for (int i = 0; i < 60; ++i) {
    const Morphism f = random_open_morphism(rng, RandomOpenConfig{1, 3, 2, 3, 12, 2});
    const auto h = induced_hom(f, 0);
    const int rank = h.target.rank;
    if (rank > 2) continue;
    const auto core = fold(h);
    bool all_connected = true;
    // Exhaustive over all transitive actions of degree <= 3.
    for (int d = 1; d <= 3; ++d) {
      std::vector<Perm> all;
      Perm p = perm_identity(d);
      do all.push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
      std::vector<std::size_t> pick(rank, 0);
      for (;;) {
        PermAction a{d, {}};
        for (auto k : pick) a.perms.push_back(all[k]);
        if (is_transitive(a) && pullback_orbit_count(h, a) != 1) all_connected = false;
        int j = 0;
        while (j < rank && ++pick[j] == all.size()) pick[j++] = 0;
        if (j == rank) break;
      }
    }
    for (int k = 0; k < 40; ++k) {
      const PermAction a = random_transitive_action(rng, rank ? uniform_int(rng, 1, 6) : 1, rank);
      if (pullback_orbit_count(h, a) != 1) all_connected = false;
    }
    if (core.surjective) CHECK(all_connected);
    if (core.index && *core.index <= 3) CHECK(all_connected == core.surjective);
    if (!core.surjective) {
      // The coset action of the image has a fixed base coset.
      const PermAction a{static_cast<int>(*core.index), core.coset_action()};
      CHECK(is_transitive(a));
      CHECK(pullback_orbit_count(h, a) > 1);
    }
  }
}

TEST_CASE("groups by enumeration") {
  const PermGroup a7 = group_closure(7, alternating_generators(7));
  CHECK(a7.order() == 2520);
  std::vector<Perm> stab;
  for (int i = 2; i <= 5; ++i) stab.push_back(perm_from_cycles(7, {{0, 1, i}}));
  const PermGroup a6 = group_closure(7, stab);
  CHECK(a6.order() == 360);
  const PermGroup c7 = group_closure(7, std::vector<Perm>{alternating_generators(7)[1]});
  CHECK(c7.order() == 7);

  CHECK(commutator_subgroup(a7).order() == 2520);
  CHECK(double_coset_count(a7, a6, c7) == 1);
  CHECK(subgroup_product_is_group(a7, a6, c7));
  CHECK(inclusion_h1_surjective(a7, a6));

  const PermGroup trivial = group_closure(7, std::vector<Perm>{});
  CHECK(commutator_subgroup(c7).order() == 1);
  CHECK_FALSE(inclusion_h1_surjective(c7, trivial));
  CHECK_FALSE(inclusion_h1_mod_m_surjective(c7, trivial, 7));
  CHECK(inclusion_h1_mod_m_surjective(c7, trivial, 2));

  CHECK(error_code([] { group_closure(7, alternating_generators(7), 100); }) == Errc::OrderCap);

  // Double cosets partition G.
  const auto parts = double_cosets(a7, c7, c7);
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  CHECK(total == a7.order());
}

TEST_CASE("double cosets against brute force and against covers") {
  Rng rng(44);
  const PermGroup s4 = group_closure(4, std::vector<Perm>{perm_from_cycles(4, {{0, 1}}), perm_from_cycles(4, {{0, 1, 2, 3}})});
  REQUIRE(s4.order() == 24);
  const PermGroup a5 = group_closure(5, alternating_generators(5));
  REQUIRE(a5.order() == 60);
  for (int i = 0; i < 30; ++i) {
    const PermGroup& g = i % 2 ? s4 : a5;
    auto pick = [&]() {
      std::vector<Perm> gens;
      for (int k = uniform_int(rng, 0, 2); k > 0; --k) gens.push_back(g.elements()[uniform_int(rng, 0, static_cast<int>(g.order()) - 1)]);
      return group_closure(g.degree(), gens);
    };
    const PermGroup h = pick(), k = pick();
    const std::size_t count = double_coset_count(g, h, k);
    CHECK(count == brute_double_cosets(g, h, k));

    // Components of the fiber product of the covers attached to H and K.
    const Graph base = rose(static_cast<int>(g.generators().size()));
    const auto pres = pi1(base, 0);
    const Morphism yh = cover_graph(base, pres, coset_action(g, h));
    const Morphism yk = cover_graph(base, pres, coset_action(g, k));
    CHECK(static_cast<std::size_t>(components(fiber_product(yh, yk).product).component_count) == count);
  }
}

TEST_CASE("quotient scenario") {
  const auto s = quotient_scenario(7);
  CHECK(s.order_g == 2520);
  CHECK(s.order_h == 360);
  CHECK(s.order_k == 7);
  CHECK(s.double_coset_count == 1);
  CHECK(s.square_connected);
  CHECK(s.g_h1_surjective);
  CHECK_FALSE(s.g_prime_h1_surjective);
  REQUIRE(s.g_prime_mod_m.size() == 1);
  CHECK(s.g_prime_mod_m[0] == std::pair<std::int64_t, bool>{7, false});
  CHECK(s.holds());

  CHECK(error_code([] { quotient_scenario(6); }) == Errc::EvenN);
  CHECK(error_code([] { quotient_scenario(5); }) == Errc::InvalidArgument);
  CHECK(error_code([] { quotient_scenario(9); }) == Errc::OrderCap);
}

TEST_CASE("quotient scenario, n = 9" * doctest::timeout(60)) {
  const auto s = quotient_scenario(9, 200'000);
  CHECK(s.order_g == 181440);
  CHECK(s.g_prime_mod_m.size() == 2);  // m = 3, 9
  CHECK(s.holds());
}
