#pragma once

namespace semint {

// Absolute tolerance for floating-point equality and ordering checks
// throughout the library (validation, cross-checks, report thresholds).
inline constexpr double kEqTolerance = 1e-9;

// Residuals of the translation identity above this magnitude count as a
// genuine violation; anything between the two thresholds is float noise
// and is never promoted to a counterexample.
inline constexpr double kViolationThreshold = 1e-6;

}  // namespace semint
