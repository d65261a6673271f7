#include "uom/monodromy.hpp"

#include <algorithm>
#include <numeric>
#include <string>


namespace uom {

Perm perm_identity(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm then(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

Perm perm_power(const Perm& p, std::int64_t k) {
  Perm base = k < 0 ? perm_inverse(p) : p;
  Perm r = perm_identity(static_cast<int>(p.size()));
  for (std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -k : k); e > 0; e >>= 1) {
    if (e & 1) r = then(r, base);
    base = then(base, base);
  }
  return r;
}

Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm p = perm_identity(degree);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  }
  if (!is_permutation(p)) throw Error(Errc::InvalidAction, "cycles are not disjoint");
  return p;
}

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

Perm PermAction::of_word(const Word& w) const {
  Perm r = perm_identity(degree);
  for (int letter : w) {
    const Perm& g = perms[std::abs(letter) - 1];
    r = then(r, letter > 0 ? g : perm_inverse(g));
  }
  return r;
}

std::optional<Violation> validate(const PermAction& a) {
  if (a.degree < 1) return Violation{Errc::InvalidAction, -1, "degree must be positive"};
  for (std::size_t j = 0; j < a.perms.size(); ++j) {
    if (static_cast<int>(a.perms[j].size()) != a.degree || !is_permutation(a.perms[j])) {
      return Violation{Errc::InvalidAction, static_cast<int>(j),
                       "generator " + std::to_string(j) + " is not a permutation of the fiber"};
    }
  }
  return std::nullopt;
}

int orbit_count(int degree, std::span<const Perm> gens) {
  UnionFind uf(degree);
  int count = degree;
  for (const auto& g : gens) {
    for (int i = 0; i < degree; ++i) count -= uf.unite(i, g[i]) ? 1 : 0;
  }
  return count;
}

bool is_transitive(const PermAction& a) { return orbit_count(a.degree, a.perms) == 1; }

Morphism cover_graph(const Graph& base, const Pi1Presentation& pres, const PermAction& a) {
  if (static_cast<int>(a.perms.size()) != pres.rank) {
    throw Error(Errc::RankMismatch, "action has " + std::to_string(a.perms.size()) +
                                        " generators, base has rank " + std::to_string(pres.rank));
  }
  if (auto v = validate(a)) throw Error(v->code, v->message);
  return cover_from_permutations(base, pres, a.degree, a.perms);
}

int pullback_orbit_count(const InducedHom& h, const PermAction& a) {
  if (static_cast<int>(a.perms.size()) != h.target.rank) {
    throw Error(Errc::RankMismatch, "action rank differs from the base rank");
  }
  if (auto v = validate(a)) throw Error(v->code, v->message);
  std::vector<Perm> images;
  for (const auto& w : h.words) images.push_back(a.of_word(w));
  return orbit_count(a.degree, images);
}

int pullback_orbit_count(const Morphism& f, const PermAction& a, int base) {
  if (components(f.source).component_count != 1) {
    throw Error(Errc::DisconnectedSource, "pullback orbits need a connected source");
  }
  return pullback_orbit_count(induced_hom(f, base), a);
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : p) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
  return h;
}

int PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

PermGroup group_closure(int degree, std::span<const Perm> gens, std::size_t cap) {
  PermGroup g;
  g.degree_ = degree;
  for (const auto& p : gens) {
    if (static_cast<int>(p.size()) != degree || !is_permutation(p)) {
      throw Error(Errc::InvalidAction, "generator is not a permutation of degree " + std::to_string(degree));
    }
    g.generators_.push_back(p);
  }
  g.elements_.push_back(perm_identity(degree));
  g.index_.emplace(g.elements_.back(), 0);
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    for (const auto& s : g.generators_) {
      Perm next = then(g.elements_[i], s);
      if (g.index_.count(next)) continue;
      if (g.elements_.size() >= cap) {
        throw Error(Errc::OrderCap, "group order exceeds cap " + std::to_string(cap));
      }
      g.index_.emplace(next, static_cast<int>(g.elements_.size()));
      g.elements_.push_back(std::move(next));
    }
  }
  return g;
}

namespace {

Perm commutator(const Perm& a, const Perm& b) {
  return then(then(perm_inverse(a), perm_inverse(b)), then(a, b));
}

// Smallest subgroup containing gens and closed under conjugation by g's generators.
PermGroup normal_closure(const PermGroup& g, std::vector<Perm> gens, std::size_t cap) {
  for (;;) {
    PermGroup n = group_closure(g.degree(), gens, cap);
    bool grew = false;
    for (const auto& s : g.generators()) {
      const Perm s_inv = perm_inverse(s);
      for (std::size_t i = 0, count = gens.size(); i < count; ++i) {
        Perm c = then(then(s_inv, gens[i]), s);
        if (!n.contains(c)) {
          gens.push_back(std::move(c));
          grew = true;
        }
      }
    }
    if (!grew) return n;
  }
}

}  // namespace

PermGroup commutator_subgroup(const PermGroup& g, std::size_t cap) {
  std::vector<Perm> gens;
  for (const auto& a : g.generators()) {
    for (const auto& b : g.generators()) gens.push_back(commutator(a, b));
  }
  return normal_closure(g, std::move(gens), cap);
}

bool subgroup_product_is_group(const PermGroup& g, const PermGroup& h, const PermGroup& k) {
  std::vector<char> hit(g.order(), 0);
  std::size_t count = 0;
  for (const auto& x : h.elements()) {
    for (const auto& y : k.elements()) {
      const int i = g.index_of(then(x, y));
      if (i < 0) return false;
      if (!hit[i]) {
        hit[i] = 1;
        ++count;
      }
    }
  }
  return count == g.order();
}

std::vector<std::vector<int>> double_cosets(const PermGroup& g, const PermGroup& h, const PermGroup& k) {
  const int n = static_cast<int>(g.order());
  UnionFind uf(n);
  for (int i = 0; i < n; ++i) {
    const Perm& x = g.elements()[i];
    for (const auto& s : h.generators()) uf.unite(i, g.index_of(then(s, x)));
    for (const auto& t : k.generators()) uf.unite(i, g.index_of(then(x, t)));
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    int& s = slot[uf.find(i)];
    if (s < 0) {
      s = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[s].push_back(i);
  }
  return out;
}

std::size_t double_coset_count(const PermGroup& g, const PermGroup& h, const PermGroup& k) {
  return double_cosets(g, h, k).size();
}

bool inclusion_h1_surjective(const PermGroup& g, const PermGroup& h, std::size_t cap) {
  auto gens = commutator_subgroup(g, cap).generators();
  gens.insert(gens.end(), h.generators().begin(), h.generators().end());
  return group_closure(g.degree(), gens, cap).order() == g.order();
}

bool inclusion_h1_mod_m_surjective(const PermGroup& g, const PermGroup& h, std::int64_t m,
                                   std::size_t cap) {
  if (m < 2) throw Error(Errc::InvalidArgument, "modulus must be at least 2");
  auto gens = commutator_subgroup(g, cap).generators();
  gens.insert(gens.end(), h.generators().begin(), h.generators().end());
  for (const auto& s : g.generators()) gens.push_back(perm_power(s, m));
  return group_closure(g.degree(), gens, cap).order() == g.order();
}

std::vector<Perm> alternating_generators(int n) {
  std::vector<int> long_cycle(n);
  std::iota(long_cycle.begin(), long_cycle.end(), 0);
  return {perm_from_cycles(n, {{0, 1, 2}}), perm_from_cycles(n, {long_cycle})};
}

bool QuotientScenario::holds() const {
  return square_connected && g_h1_surjective && !g_prime_h1_surjective && !g_prime_mod_m.empty() &&
         std::none_of(g_prime_mod_m.begin(), g_prime_mod_m.end(), [](const auto& e) { return e.second; });
}

QuotientScenario quotient_scenario(int n, std::size_t cap) {
  if (n % 2 == 0) throw Error(Errc::EvenN, "n must be odd, got " + std::to_string(n));
  if (n < 7) throw Error(Errc::InvalidArgument, "n must be at least 7, got " + std::to_string(n));
  QuotientScenario r;
  r.n = n;
  const PermGroup g = group_closure(n, alternating_generators(n), cap);

  std::vector<Perm> stabilizer_gens;
  for (int i = 2; i <= n - 2; ++i) stabilizer_gens.push_back(perm_from_cycles(n, {{0, 1, i}}));
  const PermGroup h = group_closure(n, stabilizer_gens, cap);
  const Perm n_cycle = alternating_generators(n)[1];
  const PermGroup k = group_closure(n, std::vector<Perm>{n_cycle}, cap);
  const PermGroup trivial = group_closure(n, std::vector<Perm>{}, cap);

  r.order_g = g.order();
  r.order_h = h.order();
  r.order_k = k.order();
  r.double_coset_count = double_coset_count(g, h, k);
  r.square_connected = r.double_coset_count == 1;
  r.g_h1_surjective = inclusion_h1_surjective(g, h, cap);
  r.g_prime_h1_surjective = inclusion_h1_surjective(k, trivial, cap);
  for (std::int64_t m = 2; m <= n; ++m) {
    if (n % m == 0) r.g_prime_mod_m.emplace_back(m, inclusion_h1_mod_m_surjective(k, trivial, m, cap));
  }
  return r;
}

}  // namespace uom
