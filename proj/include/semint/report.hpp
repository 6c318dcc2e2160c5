#pragma once

#include <string>
#include <utility>
#include <vector>

namespace semint {

// One failed axiom check: which axiom, where it failed, the value observed
// and the bound it had to respect.
struct Violation {
  std::string axiom;
  std::string location;
  double observed = 0.0;
  double bound = 0.0;
};

struct ValidationReport {
  bool passed = true;
  std::vector<Violation> violations;
  int grid_resolution = 0;  // lattice steps per axis; 0 for set-function checks

  void add(std::string axiom, std::string location, double observed, double bound) {
    violations.push_back({std::move(axiom), std::move(location), observed, bound});
    passed = false;
  }
};

}  // namespace semint
