#pragma once

#include "semint/capacity.hpp"
#include "semint/semicopula.hpp"

namespace semint {

// Value of I(μ,f) = sup_t S(t, μ({f >= t})) together with the threshold
// attaining it. value == eval(S, argmax_threshold, level_at_argmax) as
// evaluated.
struct IntegralResult {
  double value = 0.0;
  double argmax_threshold = 0.0;
  double level_at_argmax = 1.0;

  bool operator==(const IntegralResult&) const = default;
};

// Exact evaluation by threshold reduction: on each constancy interval of
// t -> μ({f >= t}) the map t -> S(t, μ_k) is non-decreasing, so the
// supremum over [0,1] is attained at one of the distinct positive values
// of f (and is 0 when f ≡ 0). Ties go to the smallest threshold.
IntegralResult seminormed_integral(const SemicopulaSpec& s, const Instance& inst);

// Independent brute-force evaluation: max of S(t, μ({f >= t})) over the
// uniform grid {0, step, ...} ∪ {1} ∪ {distinct values of f}. The union
// part samples discontinuous semicopulas at the true maximizers. step must
// lie in (0, 0.01].
double grid_oracle(const SemicopulaSpec& s, const Instance& inst, double step);

// Named specializations.
IntegralResult sugeno_integral(const Instance& inst);    // S = min
IntegralResult shilkret_integral(const Instance& inst);  // S = product

}  // namespace semint
