#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "semint/report.hpp"

namespace semint {

// Ordered finite set of points. The σ-algebra is implicitly the full power
// set; subsets are bitmasks over point indices (bit i = point i). At most
// 16 points so every subset table stays exhaustively checkable.
class FiniteSpace {
 public:
  explicit FiniteSpace(std::vector<std::string> points);
  static FiniteSpace numbered(int n);  // labels "x1".."xn"

  int size() const { return static_cast<int>(points_.size()); }
  std::uint32_t full_mask() const {
    return static_cast<std::uint32_t>((1u << points_.size()) - 1u);
  }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& label(int i) const { return points_[static_cast<std::size_t>(i)]; }
  int index_of(std::string_view label) const;  // -1 when absent

  bool operator==(const FiniteSpace&) const = default;

 private:
  std::vector<std::string> points_;
};

// Renders a subset as "{x1,x2}" for reports and error messages.
std::string subset_label(const FiniteSpace& space, std::uint32_t mask);

// A normalized-monotone set function candidate, one value per subset.
// Construction checks only structure (table size, finite values); the
// boundary and monotonicity axioms are checked by validate_capacity so
// that broken tables can still be loaded and reported on.
struct Capacity {
  FiniteSpace space;
  std::vector<double> values;  // 2^n entries, values[mask] = μ(subset)

  Capacity(FiniteSpace space, std::vector<double> values);
  double operator[](std::uint32_t mask) const { return values[mask]; }
};

// A function X -> [0,1], one value per point. The range is enforced at
// construction.
struct MeasurableFunction {
  FiniteSpace space;
  std::vector<double> values;

  MeasurableFunction(FiniteSpace space, std::vector<double> values);
  double max_value() const;
};

// A capacity paired with a function over the same space.
struct Instance {
  Capacity capacity;
  MeasurableFunction function;

  Instance(Capacity capacity, MeasurableFunction function);
  const FiniteSpace& space() const { return capacity.space; }
};

// Reports every violated boundary condition (μ(∅)=0, μ(X)=1) and every
// monotonicity violation over single-element-extension pairs.
ValidationReport validate_capacity(const Capacity& capacity);

// {x : f(x) >= t} as a bitmask.
std::uint32_t level_set(const MeasurableFunction& f, double t);

// μ({f >= t}); t must lie in [0,1].
double level_set_measure(const Instance& inst, double t);

// The two-point realization whose level profile is the step function
// 1 / b / 0 on {0} / (0, 1-a] / (1-a, 1]: X = {x1,x2}, f = (1-a, 0),
// μ({x1}) = b, μ({x2}) = 0. Requires a in (0,1]; at a = 0 the translation
// identity is a tautology and no witness exists.
Instance witness_instance(double a, double b);

// Pointwise f + a; requires max f + a <= 1 (within tolerance), names the
// offending point otherwise. Sums are clamped into [0,1].
MeasurableFunction shift_function(const MeasurableFunction& f, double a);

// Deterministic in seed. Uniform draws per nonempty proper subset,
// rectified to monotonicity by a max over single-element-removals, then
// μ(∅)=0 and μ(X)=1 forced. Always passes validate_capacity.
Capacity random_capacity(const FiniteSpace& space, std::uint64_t seed);

// Deterministic in seed. Each point value is drawn uniformly from the
// 1/64 lattice intersected with [0, max_value], so shifted instances have
// exact headroom arithmetic.
MeasurableFunction random_function(const FiniteSpace& space, std::uint64_t seed,
                                   double max_value);

}  // namespace semint
