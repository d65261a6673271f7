#include "uom/conditions.hpp"

#include <algorithm>

#include "uom/pi1.hpp"
#include "uom/random.hpp"

namespace uom {

bool ConditionsResult::agree() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [&](bool v) { return v == verdicts[0]; });
}

std::optional<std::string> hypothesis_violation(const Morphism& f) {
  if (auto v = check_morphism(f)) return "invalid morphism: " + v->message;
  if (components(f.source).component_count != 1) return std::string("source is not connected");
  if (components(f.target).component_count != 1) return std::string("target is not connected");
  if (const auto open = openness(f); !open.open_everywhere) {
    return "not open at vertex " + std::to_string(open.failures.front().first);
  }
  return std::nullopt;
}

ConditionsResult run_conditions(const Morphism& f, const ConditionsConfig& cfg) {
  if (auto why = hypothesis_violation(f)) throw Error(Errc::HypothesisViolation, *why);
  ConditionsResult r;

  const FoldedCore core = fold(induced_hom(f, 0));
  r.fold_index = core.index;
  r.verdicts[0] = core.surjective;
  r.witnesses[0] = "index=" + (core.index ? std::to_string(*core.index) : std::string("inf"));

  for (int n = 1; n <= cfg.max_power; ++n) {
    r.power_components.push_back(components(fiber_power(f, n, cfg.cap).power).component_count);
  }
  auto count = [&](int n) { return r.power_components[n - 1]; };
  r.verdicts[1] = count(2) == 1;
  r.witnesses[1] = "components=" + std::to_string(count(2));
  r.verdicts[2] = cfg.max_power >= 3 ? count(3) == 1 : r.verdicts[1];
  r.witnesses[2] = cfg.max_power >= 3 ? "components=" + std::to_string(count(3)) : "skipped";
  r.verdicts[3] = std::all_of(r.power_components.begin(), r.power_components.end(), [](int c) { return c == 1; });
  std::string counts;
  for (int c : r.power_components) counts += (counts.empty() ? "" : ",") + std::to_string(c);
  r.witnesses[3] = "components=" + counts;
  for (int k = 2; 2 * k <= cfg.max_power; ++k) {
    std::int64_t bound = 1;
    for (int i = 0; i < k; ++i) bound *= count(2);
    if (count(2) > 1 && count(2 * k) < bound) r.growth_ok = false;
  }

  std::vector<Morphism> probes;
  probes.push_back(etale_factorization(f).cover);
  probes.push_back(identity(f.target));
  probes.insert(probes.end(), cfg.probes.begin(), cfg.probes.end());
  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.random_probes; ++i) probes.push_back(random_open_morphism(rng, f.target));
  r.probe_count = static_cast<int>(probes.size());

  r.verdicts[4] = r.verdicts[5] = true;
  r.witnesses[4] = r.witnesses[5] = "probes=" + std::to_string(probes.size());
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const FiberProduct p = fiber_product(f, probes[i], cfg.cap);
    const int c = components(p.product).component_count;
    if (c != 1) {
      if (r.verdicts[4]) r.witnesses[4] = "probe=" + std::to_string(i) + " components=" + std::to_string(c);
      if (r.verdicts[5]) r.witnesses[5] = "probe=" + std::to_string(i) + " disconnected";
      r.verdicts[4] = r.verdicts[5] = false;
      continue;
    }
    const FoldedCore pc = fold(induced_hom(p.proj_right, 0));
    if (!pc.surjective && r.verdicts[5]) {
      r.verdicts[5] = false;
      r.witnesses[5] = "probe=" + std::to_string(i) + " index=" + (pc.index ? std::to_string(*pc.index) : "inf");
    }
  }
  return r;
}

Report conditions_report(const ConditionsResult& r) {
  static constexpr std::array<const char*, 6> names = {
      "conditions.1.pi1_surjective",     "conditions.2.square_connected",  "conditions.3.cube_connected",
      "conditions.4.powers_bounded",     "conditions.5.products_connected", "conditions.6.projections_surjective"};
  Report rep;
  for (std::size_t i = 0; i < names.size(); ++i) rep.add(names[i], r.verdicts[i] ? "yes" : "no", r.witnesses[i]);
  rep.require("conditions.agree", r.agree());
  rep.require("conditions.power_growth", r.growth_ok);
  return rep;
}

}  // namespace uom
