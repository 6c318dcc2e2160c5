#include "semint/semicopula.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "semint/tolerance.hpp"

namespace semint {

namespace {

void require_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    char msg[96];
    std::snprintf(msg, sizeof msg, "%s outside [0,1]: %.17g", name, v);
    throw std::domain_error(msg);
  }
}

// Nearest lattice step at or below v. The tolerance nudge keeps k/res from
// landing one ulp under k when res is not a power of two.
int cell_below(double v, int resolution) {
  int idx = static_cast<int>(std::floor(v * resolution + kEqTolerance));
  return std::clamp(idx, 0, resolution);
}

std::string point_str(double x, double y) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%g, %g)", x, y);
  return buf;
}

double yager_eval(double p, double x, double y) {
  // Boundary identities are pinned so the neutral element and annihilator
  // hold exactly; pow() round-trips can drift by an ulp.
  if (x == 0.0 || y == 0.0) return 0.0;
  if (x == 1.0) return y;
  if (y == 1.0) return x;
  const double u = std::pow(1.0 - x, p) + std::pow(1.0 - y, p);
  const double raw = 1.0 - std::pow(u, 1.0 / p);
  return std::clamp(raw, 0.0, std::min(x, y));
}

}  // namespace

SemicopulaSpec SemicopulaSpec::minimum() {
  return {SemicopulaKind::Min, 0.0, 0, {}, "min"};
}

SemicopulaSpec SemicopulaSpec::product() {
  return {SemicopulaKind::Product, 0.0, 0, {}, "product"};
}

SemicopulaSpec SemicopulaSpec::lukasiewicz() {
  return {SemicopulaKind::Lukasiewicz, 0.0, 0, {}, "lukasiewicz"};
}

SemicopulaSpec SemicopulaSpec::drastic() {
  return {SemicopulaKind::Drastic, 0.0, 0, {}, "drastic"};
}

SemicopulaSpec SemicopulaSpec::yager(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw std::invalid_argument("yager exponent must be a positive real");
  }
  char buf[48];
  std::snprintf(buf, sizeof buf, "yager(p=%g)", p);
  return {SemicopulaKind::Yager, p, 0, {}, buf};
}

SemicopulaSpec SemicopulaSpec::from_table(int resolution,
                                          std::vector<std::vector<double>> values,
                                          std::string label) {
  if (resolution < 1) {
    throw std::invalid_argument("table resolution must be >= 1");
  }
  const std::size_t side = static_cast<std::size_t>(resolution) + 1;
  if (values.size() != side) {
    throw std::invalid_argument("table must have resolution+1 rows");
  }
  for (const auto& row : values) {
    if (row.size() != side) {
      throw std::invalid_argument("table rows must have resolution+1 entries");
    }
    for (double v : row) {
      if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument("table entries must lie in [0,1]");
      }
    }
  }
  return {SemicopulaKind::Table, 0.0, resolution, std::move(values), std::move(label)};
}

double eval(const SemicopulaSpec& spec, double x, double y) {
  require_unit(x, "x");
  require_unit(y, "y");
  switch (spec.kind) {
    case SemicopulaKind::Min:
      return std::min(x, y);
    case SemicopulaKind::Product:
      return x * y;
    case SemicopulaKind::Lukasiewicz:
      return lukasiewicz_tnorm(x, y);
    case SemicopulaKind::Drastic:
      return (x == 1.0 || y == 1.0) ? std::min(x, y) : 0.0;
    case SemicopulaKind::Yager:
      return yager_eval(spec.yager_p, x, y);
    case SemicopulaKind::Table: {
      const auto i = static_cast<std::size_t>(cell_below(x, spec.table_resolution));
      const auto j = static_cast<std::size_t>(cell_below(y, spec.table_resolution));
      return spec.table[i][j];
    }
  }
  throw std::logic_error("unhandled semicopula kind");
}

ValidationReport validate_semicopula(const SemicopulaSpec& spec, int resolution) {
  if (resolution < 2) {
    throw std::invalid_argument("validation resolution must be >= 2");
  }
  ValidationReport report;
  report.grid_resolution = resolution;
  const auto grid = [resolution](int i) {
    return static_cast<double>(i) / resolution;
  };

  for (int i = 0; i <= resolution; ++i) {
    const double v = grid(i);
    const double sx = eval(spec, v, 1.0);
    if (std::abs(sx - v) > kEqTolerance) {
      report.add("neutral-element", point_str(v, 1.0), sx, v);
    }
    const double sy = eval(spec, 1.0, v);
    if (std::abs(sy - v) > kEqTolerance) {
      report.add("neutral-element", point_str(1.0, v), sy, v);
    }
    const double zx = eval(spec, v, 0.0);
    if (zx > kEqTolerance) {
      report.add("zero-annihilator", point_str(v, 0.0), zx, 0.0);
    }
    const double zy = eval(spec, 0.0, v);
    if (zy > kEqTolerance) {
      report.add("zero-annihilator", point_str(0.0, v), zy, 0.0);
    }
  }

  for (int i = 0; i <= resolution; ++i) {
    const double x = grid(i);
    for (int j = 0; j <= resolution; ++j) {
      const double y = grid(j);
      const double s = eval(spec, x, y);
      const double cap = std::min(x, y);
      if (s > cap + kEqTolerance) {
        report.add("bounded-by-min", point_str(x, y), s, cap);
      }
      if (i < resolution) {
        const double sx = eval(spec, grid(i + 1), y);
        if (sx < s - kEqTolerance) {
          report.add("monotone-x", point_str(grid(i + 1), y), sx, s);
        }
      }
      if (j < resolution) {
        const double sy = eval(spec, x, grid(j + 1));
        if (sy < s - kEqTolerance) {
          report.add("monotone-y", point_str(x, grid(j + 1)), sy, s);
        }
      }
    }
  }
  return report;
}

LukasiewiczGap lukasiewicz_gap(const SemicopulaSpec& spec, int resolution) {
  if (resolution < 2) {
    throw std::invalid_argument("lattice resolution must be >= 2");
  }
  LukasiewiczGap best{-1.0, 0.0, 0.0};
  for (int i = 0; i <= resolution; ++i) {
    const double c = static_cast<double>(i) / resolution;
    for (int j = 0; j <= resolution; ++j) {
      const double b = static_cast<double>(j) / resolution;
      const double d = std::abs(eval(spec, c, b) - lukasiewicz_tnorm(c, b));
      if (d > best.gap) {
        best = {d, c, b};  // strict > keeps the lexicographically first point
      }
    }
  }
  return best;
}

}  // namespace semint
