#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fragile/qstate.hpp"
#include "fragile/tolerances.hpp"

namespace fragile {

// Reduced state on `keep` (original labels); the result lists them in increasing order.
DensityMatrix partial_trace(const StateVector& s, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

struct BipartiteSplit {
  std::vector<int> side_a;
  std::vector<int> side_b;
};

// Every unordered bipartition of `labels`; side_a always holds the first label.
std::vector<BipartiteSplit> bipartite_splits(std::span<const int> labels);

// Transposes the side_b indices of rho.
Eigen::MatrixXcd partial_transpose(const DensityMatrix& rho, const BipartiteSplit& split);

// Smallest eigenvalue of the partial transpose (Peres-Horodecki test).
double ppt_min_eigenvalue(const DensityMatrix& rho, const BipartiteSplit& split);

// True when every eigenvalue of the partial transpose is >= -tol. Decided by a
// Cholesky factorization of the shifted matrix, without an eigensolve.
bool ppt_nonnegative(const DensityMatrix& rho, const BipartiteSplit& split,
                     double tol = kEigenvalueTolerance);

struct OrbitDecomposition {
  std::vector<int> labels;  // the N-1 remaining particles
  StateVector product_1;
  StateVector product_2;
  // max_ij |(P1 + P2)/2 - tr_traced |s><s||_ij
  double residual;
};

// For s in the local-phase orbit of the x-basis GHZ state, the reduced state
// after tracing out one particle is an equal mixture of two product states.
// Builds them from the orbit's local phases and reports how well they
// reproduce the actual reduced state.
OrbitDecomposition ghz_orbit_separable_decomposition(const StateVector& s, int traced);

enum class SeparabilityVerdict { Separable, Entangled, Inconclusive };

const char* to_string(SeparabilityVerdict v);

struct SplitResult {
  BipartiteSplit split;
  double ppt_min = 0.0;
};

struct TracedAnalysis {
  int traced = 0;
  std::vector<SplitResult> splits;
  // Best constructive decomposition found: "ghz_orbit" or "product_basis".
  std::optional<double> residual;
  std::string decomposition;
  SeparabilityVerdict verdict = SeparabilityVerdict::Inconclusive;
};

struct FragilityReport {
  int n_particles = 0;
  std::vector<TracedAnalysis> per_particle;

  // Every single-particle trace-out is separable.
  bool fragile() const;
};

FragilityReport fragility_report(const StateVector& s, const Tolerances& tol = {});

}  // namespace fragile
