#include "semint/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "semint/tolerance.hpp"

namespace semint {

namespace {

constexpr int kMaxPoints = 16;
constexpr int kValueLatticeSteps = 64;

// Portable uniform double in [0,1): the top 53 bits of the generator
// output, so results do not depend on the standard library's distribution
// implementation.
double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t upper_inclusive) {
  return rng() % (upper_inclusive + 1);
}

}  // namespace

FiniteSpace::FiniteSpace(std::vector<std::string> points) : points_(std::move(points)) {
  if (points_.empty() || points_.size() > kMaxPoints) {
    throw std::invalid_argument("a finite space needs between 1 and 16 points");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : points_) {
    if (label.empty()) {
      throw std::invalid_argument("point labels must be nonempty");
    }
    if (label.find(',') != std::string::npos) {
      throw std::invalid_argument("point labels must not contain ','");
    }
    if (!seen.insert(label).second) {
      throw std::invalid_argument("duplicate point label '" + label + "'");
    }
  }
}

FiniteSpace FiniteSpace::numbered(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    labels.push_back("x" + std::to_string(i));
  }
  return FiniteSpace(std::move(labels));
}

int FiniteSpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i] == label) return static_cast<int>(i);
  }
  return -1;
}

std::string subset_label(const FiniteSpace& space, std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < space.size(); ++i) {
    if (mask & (1u << i)) {
      if (!first) out += ',';
      out += space.label(i);
      first = false;
    }
  }
  out += '}';
  return out;
}

Capacity::Capacity(FiniteSpace space_in, std::vector<double> values_in)
    : space(std::move(space_in)), values(std::move(values_in)) {
  const std::size_t expected = std::size_t{1} << space.size();
  if (values.size() != expected) {
    throw std::invalid_argument("capacity table must have exactly 2^n entries, got " +
                                std::to_string(values.size()));
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("capacity values must be finite");
    }
  }
}

MeasurableFunction::MeasurableFunction(FiniteSpace space_in, std::vector<double> values_in)
    : space(std::move(space_in)), values(std::move(values_in)) {
  if (values.size() != static_cast<std::size_t>(space.size())) {
    throw std::invalid_argument("function needs one value per point");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] >= 0.0 && values[i] <= 1.0)) {
      char msg[128];
      std::snprintf(msg, sizeof msg, "function value at %s outside [0,1]: %.17g",
                    space.label(static_cast<int>(i)).c_str(), values[i]);
      throw std::domain_error(msg);
    }
  }
}

double MeasurableFunction::max_value() const {
  return *std::max_element(values.begin(), values.end());
}

Instance::Instance(Capacity capacity_in, MeasurableFunction function_in)
    : capacity(std::move(capacity_in)), function(std::move(function_in)) {
  if (!(capacity.space == function.space)) {
    throw std::invalid_argument("capacity and function must share one space");
  }
}

ValidationReport validate_capacity(const Capacity& capacity) {
  ValidationReport report;
  const auto& mu = capacity.values;
  const std::uint32_t full = capacity.space.full_mask();

  if (std::abs(mu[0]) > kEqTolerance) {
    report.add("empty-set", "{}", mu[0], 0.0);
  }
  if (std::abs(mu[full] - 1.0) > kEqTolerance) {
    report.add("full-set", subset_label(capacity.space, full), mu[full], 1.0);
  }
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    for (int i = 0; i < capacity.space.size(); ++i) {
      const std::uint32_t bit = 1u << i;
      if (mask & bit) continue;
      const std::uint32_t ext = mask | bit;
      if (mu[mask] > mu[ext] + kEqTolerance) {
        report.add("monotone",
                   subset_label(capacity.space, mask) + " -> " +
                       subset_label(capacity.space, ext),
                   mu[mask], mu[ext]);
      }
    }
  }
  return report;
}

std::uint32_t level_set(const MeasurableFunction& f, double t) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (f.values[i] >= t) mask |= 1u << i;
  }
  return mask;
}

double level_set_measure(const Instance& inst, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::domain_error("threshold t outside [0,1]");
  }
  return inst.capacity.values[level_set(inst.function, t)];
}

Instance witness_instance(double a, double b) {
  if (!(a > 0.0 && a <= 1.0)) {
    throw std::domain_error(
        "witness shift a must lie in (0,1]; the identity is a tautology at a = 0");
  }
  if (!(b >= 0.0 && b <= 1.0)) {
    throw std::domain_error("plateau measure b outside [0,1]");
  }
  FiniteSpace space({"x1", "x2"});
  Capacity mu(space, {0.0, b, 0.0, 1.0});
  MeasurableFunction f(space, {1.0 - a, 0.0});
  return Instance(std::move(mu), std::move(f));
}

MeasurableFunction shift_function(const MeasurableFunction& f, double a) {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw std::domain_error("shift a outside [0,1]");
  }
  std::vector<double> shifted;
  shifted.reserve(f.values.size());
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const double sum = f.values[i] + a;
    if (sum > 1.0 + kEqTolerance) {
      char msg[128];
      std::snprintf(msg, sizeof msg, "f + a exceeds 1 at point %s: %.17g",
                    f.space.label(static_cast<int>(i)).c_str(), sum);
      throw std::domain_error(msg);
    }
    shifted.push_back(std::min(sum, 1.0));
  }
  return MeasurableFunction(f.space, std::move(shifted));
}

Capacity random_capacity(const FiniteSpace& space, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint32_t full = space.full_mask();
  std::vector<double> mu(std::size_t{1} << space.size(), 0.0);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    mu[mask] = uniform_unit(rng);
  }
  // Monotone rectification: every subset inherits the max of its
  // single-element subsets, so A ⊆ B implies μ(A) <= μ(B) by induction.
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    for (int i = 0; i < space.size(); ++i) {
      const std::uint32_t bit = 1u << i;
      if (mask & bit) {
        mu[mask] = std::max(mu[mask], mu[mask & ~bit]);
      }
    }
  }
  mu[0] = 0.0;
  mu[full] = 1.0;
  return Capacity(space, std::move(mu));
}

MeasurableFunction random_function(const FiniteSpace& space, std::uint64_t seed,
                                   double max_value) {
  if (!(max_value >= 0.0 && max_value <= 1.0)) {
    throw std::domain_error("max_value outside [0,1]");
  }
  std::mt19937_64 rng(seed);
  const auto steps = static_cast<std::uint64_t>(
      std::floor(max_value * kValueLatticeSteps + kEqTolerance));
  std::vector<double> values(static_cast<std::size_t>(space.size()));
  for (auto& v : values) {
    v = static_cast<double>(bounded_draw(rng, steps)) / kValueLatticeSteps;
  }
  return MeasurableFunction(space, std::move(values));
}

}  // namespace semint
