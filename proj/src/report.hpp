#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace catv {

// One verified identity. `label` comes from the fixed set
// {pentagon, triangle, hexagon, closure, l1, eq1, l2, nl3, l0, nt1, ex1,
//  monoidal-MI}; `instance` pins down the inputs.
struct CheckLine {
  std::string label;
  std::string instance;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<CheckLine> lines;

  void add(std::string label, std::string instance, bool pass, std::string detail = "");
  void append(const Report& other);
  int checks() const { return static_cast<int>(lines.size()); }
  int failures() const;
  bool all_pass() const { return failures() == 0; }

  // text: one "PASS/FAIL [label] instance" line per check plus the summary.
  // records: one JSON object per line for CI consumption.
  std::string render(ReportFormat fmt) const;
};

}  // namespace catv
