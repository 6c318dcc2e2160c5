#include "semint/integral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace semint {

namespace {

// The semicopula's second argument must stay in [0,1]; a capacity table
// violating that cannot be integrated against.
void require_integrable(const Instance& inst) {
  for (double v : inst.capacity.values) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("capacity value outside [0,1]; validate the instance");
    }
  }
}

std::vector<double> positive_thresholds(const MeasurableFunction& f) {
  std::vector<double> t(f.values.begin(), f.values.end());
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  if (!t.empty() && t.front() == 0.0) t.erase(t.begin());
  return t;
}

}  // namespace

IntegralResult seminormed_integral(const SemicopulaSpec& s, const Instance& inst) {
  require_integrable(inst);
  // f ≡ 0 convention: value 0 at t* = 0, where the level set is all of X.
  IntegralResult best{0.0, 0.0, inst.capacity.values[inst.space().full_mask()]};
  for (double t : positive_thresholds(inst.function)) {
    const double level = inst.capacity.values[level_set(inst.function, t)];
    const double v = eval(s, t, level);
    if (v > best.value) {
      best = {v, t, level};
    }
  }
  return best;
}

double grid_oracle(const SemicopulaSpec& s, const Instance& inst, double step) {
  if (!(step > 0.0 && step <= 0.01)) {
    throw std::invalid_argument("oracle step must lie in (0, 0.01]");
  }
  require_integrable(inst);
  double best = 0.0;
  const auto probe = [&](double t) {
    best = std::max(best, eval(s, t, inst.capacity.values[level_set(inst.function, t)]));
  };
  const auto n = static_cast<long>(std::ceil(1.0 / step));
  for (long k = 0; k <= n; ++k) {
    probe(std::min(static_cast<double>(k) * step, 1.0));
  }
  for (double t : positive_thresholds(inst.function)) {
    probe(t);
  }
  return best;
}

IntegralResult sugeno_integral(const Instance& inst) {
  return seminormed_integral(SemicopulaSpec::minimum(), inst);
}

IntegralResult shilkret_integral(const Instance& inst) {
  return seminormed_integral(SemicopulaSpec::product(), inst);
}

}  // namespace semint
