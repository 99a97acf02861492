#pragma once

#include <vector>

#include "fragile/qstate.hpp"

namespace fragile {

// Local phase parameters: particle k picks up exp(i alpha_k) when Up and
// exp(i beta_k) when Down.
struct PhaseAssignment {
  std::vector<double> alphas;
  std::vector<double> betas;

  int n_particles() const { return static_cast<int>(alphas.size()); }
  // delta_k = alpha_k - beta_k.
  std::vector<double> deltas() const;
};

// One angle per odd-down-parity basis label, ordered by increasing basis
// index. Angles are reduced to [0, 2*pi).
class TermPhaseVector {
 public:
  TermPhaseVector(int n_particles, std::vector<double> phases);

  static TermPhaseVector zeros(int n_particles);

  int n_particles() const noexcept { return n_; }
  const std::vector<double>& phases() const noexcept { return phases_; }
  double operator[](std::size_t i) const { return phases_[i]; }
  std::size_t size() const noexcept { return phases_.size(); }

 private:
  int n_;
  std::vector<double> phases_;
};

// Basis indices with an odd number of Down spins, increasing.
std::vector<BasisIndex> odd_parity_labels(int n_particles);

// Wraps an angle into [0, 2*pi).
double reduce_angle(double radians);

StateVector special_bernstein(int n_particles);
StateVector general_bernstein(int n_particles, const TermPhaseVector& phases);

// (|e+ ... e+> + relative_sign |e- ... e->)/sqrt2 in the eigenbasis of `axis`,
// returned in sigma_z coordinates. Only X and Z are supported.
StateVector ghz(int n_particles, Axis axis, int relative_sign = -1);

// Three-particle state with singles q, pairs q^2 and no all-up component.
StateVector inhomogeneous_bernstein3(double q);

StateVector local_phase_transform(const StateVector& s, const PhaseAssignment& p);

// Term phases of local_phase_transform(special_bernstein(N), p).
TermPhaseVector push_forward(const PhaseAssignment& p);

}  // namespace fragile
