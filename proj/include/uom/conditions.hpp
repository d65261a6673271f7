#pragma once

// Evaluates, for one open map f: X -> S of connected graphs, the six
// equivalent conditions for pi_1-surjectivity:
//   1. the folded image of pi_1(X) is all of pi_1(S);
//   2. X x_S X is connected;
//   3. X x_S X x_S X is connected;
//   4. every fiber power up to the configured bound is connected;
//   5. X x_S Y is connected for every probe Y -> S;
//   6. X x_S Y -> Y is pi_1-surjective for every probe.
// Probes are the cover from the etale factorization of f, the identity of S,
// any caller-supplied open maps, and a few random open maps.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uom/fiber.hpp"
#include "uom/morphism.hpp"
#include "uom/report.hpp"

namespace uom {

struct ConditionsConfig {
  std::vector<Morphism> probes;
  int random_probes = 2;
  std::uint64_t seed = 0;
  std::int64_t cap = kDefaultPairCap;
  int max_power = 4;
};

struct ConditionsResult {
  std::array<bool, 6> verdicts{};
  std::array<std::string, 6> witnesses;
  std::optional<std::int64_t> fold_index;
  std::vector<int> power_components;  // n = 1 .. max_power
  int probe_count = 0;
  bool growth_ok = true;  // c(X^2) = c > 1 implies c(X^{2k}) >= c^k

  bool agree() const;
};

/// Throws HypothesisViolation unless f is a valid open map of connected graphs.
ConditionsResult run_conditions(const Morphism& f, const ConditionsConfig& cfg = {});
Report conditions_report(const ConditionsResult& r);

/// Checks the hypotheses; returns a description of the first violation.
std::optional<std::string> hypothesis_violation(const Morphism& f);

}  // namespace uom
