#include "uom/report.hpp"

#include <algorithm>

namespace uom {

void Report::add(std::string name, std::string verdict, std::string witness) {
  lines_.push_back({std::move(name), std::move(verdict), std::move(witness)});
}

void Report::require(std::string name, bool ok, std::string witness) {
  add(std::move(name), ok ? "PASS" : "FAIL", std::move(witness));
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& l : other.lines_) add(prefix + l.name, l.verdict, l.witness);
}

bool Report::failed() const {
  return std::any_of(lines_.begin(), lines_.end(), [](const Line& l) { return l.verdict == "FAIL"; });
}

std::string Report::str() const {
  auto sorted = lines_;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Line& a, const Line& b) { return a.name < b.name; });
  std::string out;
  for (const auto& l : sorted) {
    out += "CHECK\t" + l.name + '\t' + l.verdict;
    if (!l.witness.empty()) out += '\t' + l.witness;
    out += '\n';
  }
  return out;
}

}  // namespace uom
