#pragma once

// Finite covers as permutation actions of the base fundamental group.
//
// Permutations are 0-indexed arrays. Products compose left to right:
// then(p, q) applies p first and q second, so then(p, q)[i] == q[p[i]]. Words
// act the same way, reading letters from left to right. This matches the way
// a walk is lifted through a cover one edge at a time.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "uom/graph.hpp"
#include "uom/morphism.hpp"
#include "uom/pi1.hpp"

namespace uom {

using Perm = std::vector<int>;

Perm perm_identity(int degree);
Perm then(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
Perm perm_power(const Perm& p, std::int64_t k);
/// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}} for (0 1 2).
Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
bool is_permutation(const Perm& p);

struct PermAction {
  int degree = 1;
  std::vector<Perm> perms;  // one per generator of the base group

  /// Permutation of a word, letters applied left to right.
  Perm of_word(const Word& w) const;
};

std::optional<Violation> validate(const PermAction& a);

/// Orbit count of the group generated by gens on {0..degree-1}.
int orbit_count(int degree, std::span<const Perm> gens);
bool is_transitive(const PermAction& a);

/// The cover of base attached to the action. Throws RankMismatch.
Morphism cover_graph(const Graph& base, const Pi1Presentation& pres, const PermAction& a);

/// Orbits of the subgroup generated by the images of h's words. For connected
/// X this is the component count of X x_S cover_graph(a).
int pullback_orbit_count(const InducedHom& h, const PermAction& a);
/// Same, starting from the map itself. Throws DisconnectedSource.
int pullback_orbit_count(const Morphism& f, const PermAction& a, int base = 0);

inline constexpr std::size_t kDefaultOrderCap = 100'000;

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

/// A permutation group stored by full enumeration.
class PermGroup {
 public:
  int degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Perm>& generators() const noexcept { return generators_; }
  const std::vector<Perm>& elements() const noexcept { return elements_; }

  bool contains(const Perm& p) const { return index_.count(p) != 0; }
  /// Position of p in elements(), or -1.
  int index_of(const Perm& p) const;

  friend PermGroup group_closure(int degree, std::span<const Perm> gens, std::size_t cap);

 private:
  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;  // breadth-first order from the identity
  std::unordered_map<Perm, int, PermHash> index_;
};

/// Throws OrderCap when the group outgrows cap.
PermGroup group_closure(int degree, std::span<const Perm> gens, std::size_t cap = kDefaultOrderCap);

PermGroup commutator_subgroup(const PermGroup& g, std::size_t cap = kDefaultOrderCap);

/// True iff the product set H*K is all of G.
bool subgroup_product_is_group(const PermGroup& g, const PermGroup& h, const PermGroup& k);

/// Partition of G (element indices) into double cosets H x K.
std::vector<std::vector<int>> double_cosets(const PermGroup& g, const PermGroup& h, const PermGroup& k);
std::size_t double_coset_count(const PermGroup& g, const PermGroup& h, const PermGroup& k);

/// Whether H -> G induces a surjection on abelianizations: H * [G, G] == G.
bool inclusion_h1_surjective(const PermGroup& g, const PermGroup& h, std::size_t cap = kDefaultOrderCap);
/// Same after tensoring with Z/m: H * [G, G] * G^m == G.
bool inclusion_h1_mod_m_surjective(const PermGroup& g, const PermGroup& h, std::int64_t m,
                                   std::size_t cap = kDefaultOrderCap);

/// Covers X/A_{n-1} -> X/A_n and X -> X/C_n for a simply connected X with a
/// free A_n action, computed purely on the group side.
struct QuotientScenario {
  int n = 0;
  std::size_t order_g = 0;  // A_n
  std::size_t order_h = 0;  // A_{n-1}, stabilizer of the last point
  std::size_t order_k = 0;  // generated by the n-cycle
  std::size_t double_coset_count = 0;
  bool square_connected = false;       // one double coset, equivalently A_{n-1} * C_n == A_n
  bool g_h1_surjective = false;        // X/A_{n-1} -> X/A_n
  bool g_prime_h1_surjective = true;   // X -> X/C_n
  std::vector<std::pair<std::int64_t, bool>> g_prime_mod_m;  // m | n, m >= 2

  /// All four expected outcomes hold.
  bool holds() const;
};

/// n must be odd and at least 7. Throws EvenN, InvalidArgument or OrderCap.
QuotientScenario quotient_scenario(int n, std::size_t cap = kDefaultOrderCap);

/// Generators of A_n (n odd, n >= 3): (0 1 2) and (0 1 ... n-1).
std::vector<Perm> alternating_generators(int n);

}  // namespace uom
