#include "semint/invariance.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "semint/tolerance.hpp"

namespace semint {

namespace {

constexpr int kShiftLatticeSteps = 64;

}  // namespace

TranslationResidual translation_residual_instance(const SemicopulaSpec& s,
                                                  const Instance& inst, double a) {
  MeasurableFunction shifted = shift_function(inst.function, a);
  const double base = seminormed_integral(s, inst).value;
  const double lhs = seminormed_integral(s, Instance(inst.capacity, shifted)).value;
  const double rhs = base + a;

  // Cross-check: the shifted integral must equal
  // a ∨ max_t S(t + a, μ({f >= t})) over the positive thresholds of f.
  double alt = a;
  for (std::size_t i = 0; i < inst.function.values.size(); ++i) {
    const double t = inst.function.values[i];
    if (t <= 0.0) continue;
    const double level = inst.capacity.values[level_set(inst.function, t)];
    alt = std::max(alt, eval(s, std::min(t + a, 1.0), level));
  }
  if (std::abs(alt - lhs) > kEqTolerance) {
    throw std::logic_error("shifted-integral identity cross-check failed");
  }
  return {lhs, rhs, lhs - rhs};
}

double functional_residual(const SemicopulaSpec& s, double a, double b) {
  if (!(a >= 0.0 && a <= 1.0) || !(b >= 0.0 && b <= 1.0)) {
    throw std::domain_error("functional residual arguments outside [0,1]");
  }
  return std::max(a, eval(s, 1.0, b)) - (eval(s, 1.0 - a, b) + a);
}

std::optional<InvarianceWitness> synthesize_counterexample(const SemicopulaSpec& s,
                                                           int resolution) {
  if (resolution < 2) {
    throw std::invalid_argument("lattice resolution must be >= 2");
  }
  // Scan only c < 1: at c = 1 the neutral element forces S = S_L anyway and
  // the corresponding shift a = 1 - c = 0 carries no test power.
  double best_gap = 0.0;
  double best_c = 0.0;
  double best_b = 0.0;
  for (int i = 0; i < resolution; ++i) {
    const double c = static_cast<double>(i) / resolution;
    for (int j = 0; j <= resolution; ++j) {
      const double b = static_cast<double>(j) / resolution;
      const double d = std::abs(eval(s, c, b) - lukasiewicz_tnorm(c, b));
      if (d > best_gap) {
        best_gap = d;
        best_c = c;
        best_b = b;
      }
    }
  }
  if (best_gap <= kEqTolerance) {
    return std::nullopt;
  }
  const double a = 1.0 - best_c;
  Instance inst = witness_instance(a, best_b);
  const TranslationResidual r = translation_residual_instance(s, inst, a);
  return InvarianceWitness{a, best_b, best_c, std::move(inst), r.lhs, r.rhs, r.gap};
}

InvarianceVerdict check_invariance(const SemicopulaSpec& s, const SamplingPlan& plan) {
  InvarianceVerdict verdict;

  if (auto witness = synthesize_counterexample(s, plan.resolution)) {
    verdict.invariant = false;
    verdict.max_residual_seen = std::abs(witness->gap);
    verdict.witness = std::move(witness);
    return verdict;
  }

  std::mt19937_64 rng(plan.seed);
  for (long k = 0; k < plan.sample_count; ++k) {
    const int n = 1 + static_cast<int>(rng() % 6);
    FiniteSpace space = FiniteSpace::numbered(n);
    Capacity mu = random_capacity(space, rng());
    const double max_value =
        static_cast<double>(rng() % (kShiftLatticeSteps + 1)) / kShiftLatticeSteps;
    MeasurableFunction f = random_function(space, rng(), max_value);

    // Lattice-aligned shift with exact headroom: f values are j/64, so
    // 64 - 64*max(f) is an exact integer count of admissible steps.
    const auto used = static_cast<int>(std::llround(f.max_value() * kShiftLatticeSteps));
    const auto free_steps = static_cast<std::uint64_t>(kShiftLatticeSteps - used);
    const double a =
        static_cast<double>(rng() % (free_steps + 1)) / kShiftLatticeSteps;

    Instance inst(std::move(mu), std::move(f));
    const TranslationResidual r = translation_residual_instance(s, inst, a);
    ++verdict.samples_checked;
    verdict.max_residual_seen = std::max(verdict.max_residual_seen, std::abs(r.gap));

    if (std::abs(r.gap) > kViolationThreshold) {
      // General-instance certificate: b generalizes to the level measure
      // reached at the unshifted integral's argmax. Reachable only for
      // table specs that agree with S_L on the whole scan lattice.
      const IntegralResult base = seminormed_integral(s, inst);
      verdict.invariant = false;
      verdict.witness = InvarianceWitness{a,      base.level_at_argmax, 1.0 - a,
                                          std::move(inst), r.lhs,       r.rhs,
                                          r.gap};
      return verdict;
    }
  }
  verdict.invariant = true;
  return verdict;
}

}  // namespace semint
