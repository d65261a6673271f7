#pragma once

// Brute-force reference computations. They deliberately avoid the library's
// fiber product, folding and group routines so they can check them.

#include <map>
#include <numeric>
#include <vector>

#include "uom/graph.hpp"
#include "uom/morphism.hpp"

namespace uom::oracle {

/// Components of X_1 x_S ... x_S X_k by enumerating all vertex tuples and
/// joining the endpoints of every tuple of darts over one base dart.
inline int product_components(const std::vector<const Morphism*>& maps) {
  using Tuple = std::vector<int>;
  std::map<Tuple, int> id;
  const Graph& base = maps.front()->target;
  for (int s = 0; s < base.vertex_count(); ++s) {
    std::vector<Tuple> partial{{}};
    for (const auto* f : maps) {
      std::vector<Tuple> next;
      for (const auto& t : partial) {
        for (int x = 0; x < f->source.vertex_count(); ++x) {
          if (f->vertex_map[x] != s) continue;
          auto u = t;
          u.push_back(x);
          next.push_back(u);
        }
      }
      partial = std::move(next);
    }
    for (auto& t : partial) id.emplace(t, static_cast<int>(id.size()));
  }
  std::vector<int> parent(id.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (int t = 0; t < base.dart_count(); ++t) {
    std::vector<Tuple> tails{{}}, heads{{}};
    for (const auto* f : maps) {
      std::vector<Tuple> nt, nh;
      for (std::size_t i = 0; i < tails.size(); ++i) {
        for (int d = 0; d < f->source.dart_count(); ++d) {
          if (f->dart_map[d] != t) continue;
          auto a = tails[i];
          auto b = heads[i];
          a.push_back(f->source.origin(d));
          b.push_back(f->source.head(d));
          nt.push_back(a);
          nh.push_back(b);
        }
      }
      tails = std::move(nt);
      heads = std::move(nh);
    }
    for (std::size_t i = 0; i < tails.size(); ++i) parent[find(id.at(tails[i]))] = find(id.at(heads[i]));
  }
  int count = 0;
  for (std::size_t i = 0; i < parent.size(); ++i) count += find(static_cast<int>(i)) == static_cast<int>(i);
  return count;
}

inline int product_components(const Morphism& f, const Morphism& g) { return product_components({&f, &g}); }

/// Index of the subgroup of Z generated by exponent sums; 0 means infinite.
inline long long cyclic_index(const std::vector<std::vector<int>>& words) {
  long long g = 0;
  for (const auto& w : words) {
    long long sum = 0;
    for (int letter : w) sum += letter > 0 ? 1 : -1;
    g = std::gcd(g, sum < 0 ? -sum : sum);
  }
  return g;
}

/// Orbits of a group generated by permutations, by repeated closure from each point.
inline int orbits(int degree, const std::vector<std::vector<int>>& gens) {
  std::vector<int> label(degree, -1);
  int count = 0;
  for (int start = 0; start < degree; ++start) {
    if (label[start] >= 0) continue;
    std::vector<int> stack{start};
    label[start] = count;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto& g : gens) {
        if (label[g[x]] < 0) {
          label[g[x]] = count;
          stack.push_back(g[x]);
        }
      }
    }
    ++count;
  }
  return count;
}

}  // namespace uom::oracle
