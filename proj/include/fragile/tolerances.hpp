#pragma once

namespace fragile {

// Norms, unitarity, traces.
inline constexpr double kNormTolerance = 1e-12;
// Smallest eigenvalue still counted as nonnegative.
inline constexpr double kEigenvalueTolerance = 1e-10;
// Deviation |joint - product| below which outcomes count as independent.
inline constexpr double kProbabilityTolerance = 1e-9;
// Entrywise residual certifying a constructive decomposition.
inline constexpr double kResidualTolerance = 1e-10;
// Phase residual (radians, distance to the nearest multiple of 2*pi).
inline constexpr double kPhaseTolerance = 1e-9;

inline constexpr int kMaxStateParticles = 16;
inline constexpr int kMaxDensityParticles = 12;

struct Tolerances {
  double probability = kProbabilityTolerance;
  double eigenvalue = kEigenvalueTolerance;
  double residual = kResidualTolerance;
  double phase = kPhaseTolerance;
};

}  // namespace fragile
