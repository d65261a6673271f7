#pragma once

#include <string>
#include <vector>

namespace uom {

/// Tab-separated check lines, `CHECK <name> <verdict> [<witness>]`, printed
/// sorted by name. Assertions use the verdicts PASS and FAIL; measurements
/// print their value as the verdict.
class Report {
 public:
  void add(std::string name, std::string verdict, std::string witness = {});
  void require(std::string name, bool ok, std::string witness = {});
  void merge(const Report& other, const std::string& prefix = {});

  bool failed() const;
  std::string str() const;

 private:
  struct Line {
    std::string name, verdict, witness;
  };
  std::vector<Line> lines_;
};

}  // namespace uom
