#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "semint/report.hpp"

namespace semint {

// Łukasiewicz t-norm, (x + y - 1) ∨ 0. Everything else in this library is
// measured against it.
inline double lukasiewicz_tnorm(double x, double y) {
  return std::max(x + y - 1.0, 0.0);
}

enum class SemicopulaKind { Min, Product, Lukasiewicz, Drastic, Yager, Table };

// An evaluable binary aggregation on [0,1]^2 with neutral element 1: one of
// the named families, or a monotone sample table on a uniform lattice.
// Tables evaluate as step functions (nearest lattice cell below), which
// keeps monotone tables monotone and never overshoots the stored samples.
struct SemicopulaSpec {
  SemicopulaKind kind = SemicopulaKind::Lukasiewicz;
  double yager_p = 0.0;                     // Yager only, > 0
  int table_resolution = 0;                 // Table only, >= 1
  std::vector<std::vector<double>> table;   // (res+1) x (res+1); row = x step
  std::string label;

  static SemicopulaSpec minimum();
  static SemicopulaSpec product();
  static SemicopulaSpec lukasiewicz();
  static SemicopulaSpec drastic();
  static SemicopulaSpec yager(double p);
  static SemicopulaSpec from_table(int resolution,
                                   std::vector<std::vector<double>> values,
                                   std::string label = "table");
};

// S(x, y) for x, y in [0,1]; throws std::domain_error outside the square.
double eval(const SemicopulaSpec& spec, double x, double y);

// Checks the semicopula axioms on the uniform (resolution+1)^2 lattice:
// neutral element on the x=1 and y=1 lines, the bound S <= min,
// coordinatewise monotonicity between adjacent lattice points, and the
// zero-annihilator consequence. Certifies only the sampled points.
ValidationReport validate_semicopula(const SemicopulaSpec& spec, int resolution);

struct LukasiewiczGap {
  double gap = 0.0;  // max |S - S_L| over the lattice
  double c = 0.0;    // attaining point, smallest c then smallest b on ties
  double b = 0.0;
};

LukasiewiczGap lukasiewicz_gap(const SemicopulaSpec& spec, int resolution);

}  // namespace semint
