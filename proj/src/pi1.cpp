#include "uom/pi1.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace uom {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

std::vector<int> Pi1Presentation::path_from_base(const Graph& g, int v) const {
  std::vector<int> path;
  while (v != base) {
    const int d = parent_dart[v];
    path.push_back(d);
    v = g.origin(d);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<int> Pi1Presentation::generator_loop(const Graph& g, int j) const {
  const int d = generators[j];
  auto loop = path_from_base(g, g.origin(d));
  loop.push_back(d);
  auto back = path_from_base(g, g.head(d));
  for (auto it = back.rbegin(); it != back.rend(); ++it) loop.push_back(g.partner(*it));
  return loop;
}

Word Pi1Presentation::word_of_walk(std::span<const int> darts) const {
  Word w;
  for (int t : darts) {
    const int gen = generator_of_edge[edge_of(t)];
    if (gen < 0) continue;
    w.push_back(t == positive_dart(edge_of(t)) ? gen + 1 : -(gen + 1));
  }
  return free_reduce(std::move(w));
}

Pi1Presentation pi1(const Graph& g, int base) {
  if (base < 0 || base >= g.vertex_count()) {
    throw Error(Errc::IndexOutOfRange, "base vertex " + std::to_string(base) + " out of range");
  }
  Pi1Presentation p;
  p.base = base;
  p.parent_dart.assign(g.vertex_count(), -1);
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<char> tree_edge(g.edge_count(), 0);
  const auto stars = g.stars();
  std::deque<int> queue{base};
  seen[base] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int d : stars[v]) {
      const int w = g.head(d);
      if (seen[w]) continue;
      seen[w] = 1;
      ++reached;
      p.parent_dart[w] = d;
      p.tree_darts.push_back(d);
      tree_edge[edge_of(d)] = 1;
      queue.push_back(w);
    }
  }
  if (reached != g.vertex_count()) {
    throw Error(Errc::DisconnectedGraph, "graph has vertices unreachable from " + std::to_string(base));
  }
  p.generator_of_edge.assign(g.edge_count(), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (tree_edge[e]) continue;
    p.generator_of_edge[e] = static_cast<int>(p.generators.size());
    p.generators.push_back(positive_dart(e));
  }
  p.rank = static_cast<int>(p.generators.size());
  return p;
}

InducedHom induced_hom(const Morphism& m, int base) {
  InducedHom h;
  h.source = pi1(m.source, base);
  h.target = pi1(m.target, m.vertex_map[base]);
  for (int j = 0; j < h.source.rank; ++j) {
    auto loop = h.source.generator_loop(m.source, j);
    for (int& d : loop) d = m.dart_map[d];
    h.words.push_back(h.target.word_of_walk(loop));
  }
  return h;
}

namespace {

// Incremental folding: each vertex keeps one entry per signed label; inserting a
// second entry under an existing label schedules the two targets for merging.
class Folder {
 public:
  int add_vertex() {
    parent_.push_back(static_cast<int>(parent_.size()));
    adj_.emplace_back();
    return parent_.back();
  }

  void add_edge(int u, int label, int v) {
    insert(u, label, v);
    insert(v, -label, u);
  }

  void run() {
    while (!pending_.empty()) {
      const auto [a, b] = pending_.front();
      pending_.pop_front();
      merge(a, b);
    }
  }

  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  std::map<int, int>& adjacency(int v) { return adj_[v]; }
  int size() const { return static_cast<int>(parent_.size()); }

 private:
  void insert(int u, int key, int v) {
    u = find(u);
    auto [it, inserted] = adj_[u].emplace(key, v);
    if (!inserted) pending_.emplace_back(it->second, v);
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    auto moved = std::move(adj_[b]);
    adj_[b].clear();
    for (const auto& [key, t] : moved) insert(a, key, t);
  }

  std::vector<int> parent_;
  std::vector<std::map<int, int>> adj_;
  std::deque<std::pair<int, int>> pending_;
};

}  // namespace

std::vector<std::vector<int>> FoldedCore::coset_action() const {
  if (!index) throw Error(Errc::InfiniteIndex, "core is not a cover of the rose");
  std::vector<std::vector<int>> perms(rank, std::vector<int>(vertex_count, -1));
  for (const auto& e : edges) perms[e.label][e.from] = e.to;
  return perms;
}

FoldedCore fold(std::span<const Word> words, int rank, std::optional<std::uint64_t> shuffle_seed) {
  struct Petal {
    int from, label, to;
  };
  Folder folder;
  const int base = folder.add_vertex();
  std::vector<Petal> petals;
  for (const auto& w : words) {
    int cur = base;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const int letter = w[i];
      if (letter == 0 || std::abs(letter) > rank) {
        throw Error(Errc::InvalidArgument, "letter " + std::to_string(letter) + " outside rank " +
                                               std::to_string(rank));
      }
      const int next = i + 1 == w.size() ? base : folder.add_vertex();
      petals.push_back({cur, letter, next});
      cur = next;
    }
  }
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed);
    for (std::size_t i = petals.size(); i > 1; --i) std::swap(petals[i - 1], petals[rng() % i]);
  }
  for (const auto& p : petals) folder.add_edge(p.from, p.label, p.to);
  folder.run();

  // Drop hanging trees away from the base; they do not change the subgroup.
  const int root = folder.find(base);
  std::vector<int> live;
  for (int v = 0; v < folder.size(); ++v) {
    if (folder.find(v) == v) live.push_back(v);
  }
  bool trimmed = true;
  while (trimmed) {
    trimmed = false;
    for (int v : live) {
      auto& adj = folder.adjacency(v);
      if (v == root || adj.size() != 1) continue;
      const auto [key, t] = *adj.begin();
      folder.adjacency(folder.find(t)).erase(-key);
      adj.clear();
      trimmed = true;
    }
  }

  FoldedCore core;
  core.rank = rank;
  std::map<int, int> renumber{{root, 0}};
  std::deque<int> queue{root};
  std::vector<int> order;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (const auto& [key, t] : folder.adjacency(v)) {
      const int w = folder.find(t);
      if (renumber.emplace(w, static_cast<int>(renumber.size())).second) queue.push_back(w);
    }
  }
  core.vertex_count = static_cast<int>(order.size());
  bool complete = true;
  for (int v : order) {
    const auto& adj = folder.adjacency(v);
    if (static_cast<int>(adj.size()) != 2 * rank) complete = false;
    for (const auto& [key, t] : adj) {
      if (key > 0) core.edges.push_back({renumber[v], renumber[folder.find(t)], key - 1});
    }
  }
  std::sort(core.edges.begin(), core.edges.end());
  if (complete) core.index = core.vertex_count;
  core.surjective = core.index == 1;
  return core;
}

FoldedCore fold(const InducedHom& h, std::optional<std::uint64_t> shuffle_seed) {
  return fold(h.words, h.target.rank, shuffle_seed);
}

IntMatrix::IntMatrix(int r, int c, std::vector<std::int64_t> values)
    : rows(r), cols(c), data(std::move(values)) {
  if (data.size() != static_cast<std::size_t>(r) * c) {
    throw Error(Errc::InvalidArgument, "matrix data does not match its shape");
  }
}

IntMatrix h1_matrix(const InducedHom& h) {
  IntMatrix m(h.target.rank, h.source.rank);
  for (int j = 0; j < h.source.rank; ++j) {
    for (int letter : h.words[j]) m(std::abs(letter) - 1, j) += letter > 0 ? 1 : -1;
  }
  return m;
}

std::vector<std::int64_t> smith_invariants(const IntMatrix& m) {
  using boost::multiprecision::cpp_int;
  std::vector<std::vector<cpp_int>> a(m.rows, std::vector<cpp_int>(m.cols));
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) a[i][j] = m(i, j);
  }
  const int rows = m.rows, cols = m.cols;
  std::vector<std::int64_t> out;
  for (int t = 0; t < std::min(rows, cols); ++t) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    auto bring_min_to_pivot = [&]() {
      int bi = -1, bj = -1;
      for (int i = t; i < rows; ++i) {
        for (int j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (bi < 0 || abs(a[i][j]) < abs(a[bi][bj]))) bi = i, bj = j;
        }
      }
      if (bi < 0) return false;
      std::swap(a[t], a[bi]);
      for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][bj]);
      return true;
    };
    if (!bring_min_to_pivot()) break;
    for (;;) {
      bool dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const cpp_int q = a[i][t] / a[t][t];
        for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) dirty = true;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const cpp_int q = a[t][j] / a[t][t];
        for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) dirty = true;
      }
      if (dirty) {
        bring_min_to_pivot();
        continue;
      }
      // Pivot must divide the rest of the block; fold an offending row in otherwise.
      int bad = -1;
      for (int i = t + 1; i < rows && bad < 0; ++i) {
        for (int j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      for (int j = t; j < cols; ++j) a[t][j] += a[bad][j];
    }
    const cpp_int d = abs(a[t][t]);
    if (d > std::numeric_limits<std::int64_t>::max()) {
      throw Error(Errc::InvalidArgument, "invariant factor exceeds 64 bits");
    }
    out.push_back(d.convert_to<std::int64_t>());
  }
  return out;
}

bool h1_surjective(const IntMatrix& m) {
  const auto inv = smith_invariants(m);
  return static_cast<int>(inv.size()) == m.rows &&
         std::all_of(inv.begin(), inv.end(), [](std::int64_t d) { return d == 1; });
}

namespace {

int rank_mod_prime(const IntMatrix& m, std::int64_t p) {
  std::vector<std::vector<std::int64_t>> a(m.rows, std::vector<std::int64_t>(m.cols));
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) a[i][j] = ((m(i, j) % p) + p) % p;
  }
  auto inv_mod = [p](std::int64_t x) {
    std::int64_t r = 1, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  for (int j = 0; j < m.cols && rank < m.rows; ++j) {
    int pivot = -1;
    for (int i = rank; i < m.rows; ++i) {
      if (a[i][j] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    const std::int64_t inv = inv_mod(a[rank][j]);
    for (int i = 0; i < m.rows; ++i) {
      if (i == rank || a[i][j] == 0) continue;
      const std::int64_t f = a[i][j] * inv % p;
      for (int k = j; k < m.cols; ++k) a[i][k] = ((a[i][k] - f * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool h1_mod_m_surjective(const IntMatrix& matrix, std::int64_t m) {
  if (m < 2) throw Error(Errc::InvalidArgument, "modulus must be at least 2");
  std::int64_t rest = m;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    if (rank_mod_prime(matrix, p) != matrix.rows) return false;
  }
  if (rest > 1 && rank_mod_prime(matrix, rest) != matrix.rows) return false;
  return true;
}

Morphism cover_from_permutations(const Graph& g, const Pi1Presentation& pres, int degree,
                                 std::span<const std::vector<int>> perms) {
  if (static_cast<int>(perms.size()) != pres.rank) {
    throw Error(Errc::RankMismatch, std::to_string(perms.size()) + " permutations for rank " +
                                        std::to_string(pres.rank));
  }
  if (degree < 1) throw Error(Errc::InvalidAction, "cover degree must be positive");
  for (const auto& p : perms) {
    std::vector<char> seen(degree, 0);
    if (static_cast<int>(p.size()) != degree) throw Error(Errc::InvalidAction, "permutations differ in degree");
    for (int x : p) {
      if (x < 0 || x >= degree || seen[x]) throw Error(Errc::InvalidAction, "entry is not a bijection");
      seen[x] = 1;
    }
  }
  const int nv = g.vertex_count();
  Morphism out{Graph(degree * nv), g, {}, {}};
  out.vertex_map.resize(degree * nv);
  for (int i = 0; i < degree; ++i) {
    for (int v = 0; v < nv; ++v) out.vertex_map[i * nv + v] = v;
  }
  for (int i = 0; i < degree; ++i) {
    for (int e = 0; e < g.edge_count(); ++e) {
      const int gen = pres.generator_of_edge[e];
      const int j = gen < 0 ? i : perms[gen][i];
      out.source.add_edge(i * nv + g.origin(positive_dart(e)), j * nv + g.origin(negative_dart(e)));
      out.dart_map.push_back(positive_dart(e));
      out.dart_map.push_back(negative_dart(e));
    }
  }
  return out;
}

EtaleFactorization etale_factorization(const Morphism& m, int base) {
  const InducedHom h = induced_hom(m, base);
  EtaleFactorization out;
  out.core = fold(h);
  if (!out.core.index) {
    throw Error(Errc::InfiniteIndex, "image of pi_1 has infinite index; the map is not open");
  }
  out.degree = static_cast<int>(*out.core.index);
  const Graph& s = m.target;
  out.cover = cover_from_permutations(s, h.target, out.degree, out.core.coset_action());
  const Graph& cover_graph = out.cover.source;

  // lift[v'][t]: the dart of S' at v' lying over dart t of S.
  std::vector<std::vector<int>> lift(cover_graph.vertex_count(), std::vector<int>(s.dart_count(), -1));
  for (int d = 0; d < cover_graph.dart_count(); ++d) lift[cover_graph.origin(d)][out.cover.dart_map[d]] = d;

  Morphism to_cover{m.source, cover_graph, std::vector<int>(m.source.vertex_count(), -1),
                    std::vector<int>(m.source.dart_count(), -1)};
  const auto stars = m.source.stars();
  to_cover.vertex_map[base] = m.vertex_map[base];  // sheet 0 over the base image
  std::deque<int> queue{base};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int d : stars[x]) {
      const int lifted = lift[to_cover.vertex_map[x]][m.dart_map[d]];
      to_cover.dart_map[d] = lifted;
      const int y = m.source.head(d);
      const int image = cover_graph.head(lifted);
      if (to_cover.vertex_map[y] < 0) {
        to_cover.vertex_map[y] = image;
        queue.push_back(y);
      } else if (to_cover.vertex_map[y] != image) {
        throw std::logic_error("etale_factorization: loop image escapes the folded subgroup");
      }
    }
  }
  out.to_cover = std::move(to_cover);
  return out;
}

}  // namespace uom
