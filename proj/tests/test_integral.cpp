#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "semint/integral.hpp"
#include "semint/tolerance.hpp"

using namespace semint;

namespace {

std::vector<SemicopulaSpec> builtin_specs() {
  return {SemicopulaSpec::minimum(),    SemicopulaSpec::product(),
          SemicopulaSpec::lukasiewicz(), SemicopulaSpec::drastic(),
          SemicopulaSpec::yager(0.5),    SemicopulaSpec::yager(1.0),
          SemicopulaSpec::yager(2.0)};
}

// X = {x1,x2}, f = (0.3, 0.7), μ({x1}) = 0.2, μ({x2}) = 0.4, μ(X) = 1.
Instance two_point_example() {
  FiniteSpace space = FiniteSpace::numbered(2);
  return Instance(Capacity(space, {0.0, 0.2, 0.4, 1.0}),
                  MeasurableFunction(space, {0.3, 0.7}));
}

Instance random_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FiniteSpace space = FiniteSpace::numbered(1 + static_cast<int>(rng() % 6));
  Capacity mu = random_capacity(space, rng());
  MeasurableFunction f = random_function(space, rng(), 1.0);
  return Instance(std::move(mu), std::move(f));
}

}  // namespace

TEST_CASE("shilkret value of the two-point example") {
  // Candidates by hand: t = 0.3 has level μ({x1,x2}) = 1, so 0.3 * 1 = 0.3;
  // t = 0.7 has level μ({x2}) = 0.4, so 0.7 * 0.4 = 0.28.
  CHECK(0.3 * 1.0 == 0.3);
  CHECK(0.7 * 0.4 == doctest::Approx(0.28).epsilon(1e-15));

  const auto r = seminormed_integral(SemicopulaSpec::product(), two_point_example());
  CHECK(r.value == 0.3);
  CHECK(r.argmax_threshold == 0.3);
  CHECK(r.level_at_argmax == 1.0);
}

TEST_CASE("sugeno value of the two-point example") {
  // Candidates: min(0.3, 1) = 0.3 and min(0.7, 0.4) = 0.4.
  const auto r = seminormed_integral(SemicopulaSpec::minimum(), two_point_example());
  CHECK(r.value == 0.4);
  CHECK(r.argmax_threshold == 0.7);
  CHECK(r.level_at_argmax == 0.4);
}

TEST_CASE("constant functions integrate to their constant") {
  for (const auto& spec : builtin_specs()) {
    for (double c : {0.0, 0.25, 0.4, 1.0}) {
      for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        FiniteSpace space = FiniteSpace::numbered(3);
        Instance inst(random_capacity(space, seed),
                      MeasurableFunction(space, {c, c, c}));
        const auto r = seminormed_integral(spec, inst);
        CAPTURE(spec.label);
        CAPTURE(c);
        CHECK(std::abs(r.value - c) <= kEqTolerance);
        CHECK(r.argmax_threshold == c);
      }
    }
  }
}

TEST_CASE("the zero function integrates to zero with t* = 0") {
  FiniteSpace space = FiniteSpace::numbered(2);
  Instance inst(random_capacity(space, 11), MeasurableFunction(space, {0.0, 0.0}));
  for (const auto& spec : builtin_specs()) {
    const auto r = seminormed_integral(spec, inst);
    CHECK(r.value == 0.0);
    CHECK(r.argmax_threshold == 0.0);
    CHECK(r.level_at_argmax == 1.0);
    CHECK(grid_oracle(spec, inst, 1e-3) == 0.0);
  }
}

TEST_CASE("argmax ties break toward the smallest threshold") {
  FiniteSpace space = FiniteSpace::numbered(2);

  // Product on f = (0.5, 1) with μ({x2}) = 0.5: the candidates 0.5 * 1 and
  // 1 * 0.5 tie at 0.5, so t* must be the smaller threshold.
  Instance tie(Capacity(space, {0.0, 0.5, 0.5, 1.0}),
               MeasurableFunction(space, {0.5, 1.0}));
  const auto r = seminormed_integral(SemicopulaSpec::product(), tie);
  CHECK(r.value == 0.5);
  CHECK(r.argmax_threshold == 0.5);
  CHECK(r.level_at_argmax == 1.0);

  // Drastic on f = (0.25, 0) with μ({x1}) = 0.5: the only candidate is 0,
  // so the argmax falls back to t* = 0.
  Instance flat(Capacity(space, {0.0, 0.5, 0.5, 1.0}),
                MeasurableFunction(space, {0.25, 0.0}));
  const auto z = seminormed_integral(SemicopulaSpec::drastic(), flat);
  CHECK(z.value == 0.0);
  CHECK(z.argmax_threshold == 0.0);
  CHECK(z.level_at_argmax == 1.0);
}

TEST_CASE("result invariant: value equals S(t*, level) as evaluated") {
  for (const auto& spec : builtin_specs()) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      const Instance inst = random_instance(seed);
      const auto r = seminormed_integral(spec, inst);
      CHECK(r.value == eval(spec, r.argmax_threshold, r.level_at_argmax));
      CHECK(r.value >= 0.0);
      CHECK(r.value <= 1.0);
    }
  }
}

TEST_CASE("grid oracle on the Łukasiewicz witness instance") {
  // S_L(t, 0.5) = max(t - 0.5, 0) = 0 for t <= 0.5, and the level drops to
  // 0 beyond the plateau, so the whole sweep stays at 0.
  const Instance inst = witness_instance(0.5, 0.5);
  CHECK(grid_oracle(SemicopulaSpec::lukasiewicz(), inst, 1e-3) == 0.0);
}

TEST_CASE("grid oracle matches the product example through the union grid") {
  const double oracle = grid_oracle(SemicopulaSpec::product(), two_point_example(), 1e-4);
  CHECK(std::abs(oracle - 0.3) <= 1e-9);
}

TEST_CASE("grid oracle rejects out-of-range steps") {
  const Instance inst = two_point_example();
  CHECK_THROWS_AS(grid_oracle(SemicopulaSpec::product(), inst, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(grid_oracle(SemicopulaSpec::product(), inst, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(grid_oracle(SemicopulaSpec::product(), inst, -1e-3),
                  std::invalid_argument);
  CHECK_NOTHROW(grid_oracle(SemicopulaSpec::product(), inst, 0.01));
}

TEST_CASE("oracle dominance and agreement on random instances") {
  for (const auto& spec : builtin_specs()) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      const Instance inst = random_instance(seed * 131);
      const double exact = seminormed_integral(spec, inst).value;
      const double oracle = grid_oracle(spec, inst, 1e-3);
      CAPTURE(spec.label);
      CAPTURE(seed);
      CHECK(oracle <= exact + 1e-12);
      CHECK(std::abs(oracle - exact) <= kEqTolerance);
    }
  }
}

TEST_CASE("oracle agreement for the drastic family at exact thresholds") {
  // Only the union grid hits t = 0.75, where drastic jumps to min(t, 1).
  const Instance inst = witness_instance(0.25, 1.0);
  const double exact = seminormed_integral(SemicopulaSpec::drastic(), inst).value;
  const double oracle = grid_oracle(SemicopulaSpec::drastic(), inst, 1e-3);
  CHECK(exact == 0.75);
  CHECK(oracle == 0.75);
}

TEST_CASE("monotonicity in the integrand") {
  std::mt19937_64 rng(2024);
  for (const auto& spec : builtin_specs()) {
    for (int k = 0; k < 40; ++k) {
      FiniteSpace space = FiniteSpace::numbered(1 + static_cast<int>(rng() % 6));
      Capacity mu = random_capacity(space, rng());
      MeasurableFunction f = random_function(space, rng(), 1.0);
      MeasurableFunction g = random_function(space, rng(), 1.0);
      std::vector<double> upper(f.values);
      for (std::size_t i = 0; i < upper.size(); ++i) {
        upper[i] = std::max(upper[i], g.values[i]);
      }
      const double lo =
          seminormed_integral(spec, Instance(mu, f)).value;
      const double hi =
          seminormed_integral(spec, Instance(mu, MeasurableFunction(space, upper))).value;
      CHECK(lo <= hi + 1e-12);
    }
  }
}

TEST_CASE("monotonicity in the capacity") {
  std::mt19937_64 rng(515);
  for (const auto& spec : builtin_specs()) {
    for (int k = 0; k < 40; ++k) {
      FiniteSpace space = FiniteSpace::numbered(1 + static_cast<int>(rng() % 6));
      Capacity mu = random_capacity(space, rng());
      Capacity nu = random_capacity(space, rng());
      std::vector<double> upper(mu.values);
      for (std::size_t i = 0; i < upper.size(); ++i) {
        upper[i] = std::max(upper[i], nu.values[i]);  // pointwise max stays monotone
      }
      MeasurableFunction f = random_function(space, rng(), 1.0);
      const double lo = seminormed_integral(spec, Instance(mu, f)).value;
      const double hi =
          seminormed_integral(spec, Instance(Capacity(space, upper), f)).value;
      CHECK(lo <= hi + 1e-12);
    }
  }
}

TEST_CASE("sugeno bounds and domination of every semicopula") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const Instance inst = random_instance(seed * 17);
    const double sugeno = sugeno_integral(inst).value;
    const double lo = *std::min_element(inst.function.values.begin(),
                                        inst.function.values.end());
    const double hi = inst.function.max_value();
    CHECK(sugeno >= lo);
    CHECK(sugeno <= hi);
    for (const auto& spec : builtin_specs()) {
      CHECK(seminormed_integral(spec, inst).value <= sugeno);
    }
  }
}

TEST_CASE("sugeno and shilkret are exact aliases") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Instance inst = random_instance(seed * 7 + 3);
    CHECK(sugeno_integral(inst) ==
          seminormed_integral(SemicopulaSpec::minimum(), inst));
    CHECK(shilkret_integral(inst) ==
          seminormed_integral(SemicopulaSpec::product(), inst));
  }
}

TEST_CASE("shilkret examples") {
  FiniteSpace space = FiniteSpace::numbered(2);
  // Additive uniform capacity, f = (1, 0): the only candidate is
  // S(1, μ({x1})) = μ({x1}).
  Instance uniform(Capacity(space, {0.0, 0.5, 0.5, 1.0}),
                   MeasurableFunction(space, {1.0, 0.0}));
  const auto shil = shilkret_integral(uniform);
  CHECK(shil.value == 0.5);
  CHECK(shil.argmax_threshold == 1.0);
  const auto sug = sugeno_integral(uniform);
  CHECK(sug.value == 0.5);
}

TEST_CASE("structurally invalid instances are rejected") {
  FiniteSpace space = FiniteSpace::numbered(2);
  Instance bad(Capacity(space, {0.0, 1.5, 0.5, 1.0}),
               MeasurableFunction(space, {0.5, 0.5}));
  CHECK_THROWS_AS(seminormed_integral(SemicopulaSpec::product(), bad),
                  std::invalid_argument);
  CHECK_THROWS_AS(grid_oracle(SemicopulaSpec::product(), bad, 1e-3),
                  std::invalid_argument);
}
