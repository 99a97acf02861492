#pragma once

// Orbits of Bernstein states under local phase transformations.
//
// A local phase transformation shifts the phase of each odd-parity term T by
// c + sum of delta_k over the particles k that are Up in T (odd N), where c is
// an overall constant. For even N the overall phase removed is
// alpha_N + sum_{k<N} beta_k, so delta_N enters with coefficient -1 when
// particle N is Down and 0 when it is Up. The N single-down terms give the
// forward matrix below; its inverse is known in closed form.

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "fragile/constructions.hpp"
#include "fragile/tolerances.hpp"

namespace fragile {

// numerators / denominator, denominator > 0 and gcd-reduced.
struct RationalVector {
  Eigen::VectorXi numerators;
  int denominator = 1;

  static RationalVector reduced(Eigen::VectorXi numerators, int denominator);
  double value(Eigen::Index i) const {
    return static_cast<double>(numerators(i)) / denominator;
  }
  bool operator==(const RationalVector& other) const;
};

struct PhaseShiftSystem {
  int n = 0;
  // phi = forward * delta; row j is the single-down term with particle N + 1 - j down,
  // i.e. rows follow increasing basis index.
  Eigen::MatrixXi forward;
  // delta = (inverse_numerators / inverse_denominator) * phi.
  Eigen::MatrixXi inverse_numerators;
  int inverse_denominator = 1;

  Eigen::MatrixXd inverse() const {
    return inverse_numerators.cast<double>() / inverse_denominator;
  }
  // forward * inverse == identity, checked in integer arithmetic.
  bool verify_exact() const;
};

PhaseShiftSystem phase_shift_system(int n);

// Phase-shift coefficients (c, delta_1..delta_N) of an odd-parity term.
Eigen::VectorXi phase_shift_coefficients(BasisIndex label, int n);

// Generators in units of pi: 2 * (column j of the inverse matrix).
struct PeriodLattice {
  int n = 0;
  std::vector<RationalVector> generators;
};

PeriodLattice period_lattice(int n);

// True when shifting the deltas by `shift_in_pi` (units of pi) leaves every
// Bernstein state of N particles projectively unchanged. Exact arithmetic.
bool is_state_period(int n, const RationalVector& shift_in_pi);

struct OrbitMembership {
  bool reachable = false;
  std::optional<std::vector<double>> deltas;  // radians, present iff reachable
  double constant = 0.0;
  double max_residual_mod_2pi = 0.0;
};

// Best-fitting (constant, deltas) for the target phases, whether or not the
// target lies in the orbit.
struct OrbitFit {
  std::vector<double> deltas;
  double constant = 0.0;
  double max_residual_mod_2pi = 0.0;
};

OrbitFit best_orbit_fit(int n, const TermPhaseVector& t);

// Decides whether general_bernstein(N, t) lies in the local-phase orbit of
// special_bernstein(N). When reachable, local_phase_transform with
// alphas = deltas and betas = 0 reproduces the target up to a global phase.
OrbitMembership orbit_membership(int n, const TermPhaseVector& t, const Tolerances& tol = {});

struct DimensionGap {
  int orbit_dim = 0;
  std::uint64_t bernstein_dim = 0;
};

DimensionGap dimension_gap(int n);

// min over integers m of |r - 2 pi m|.
double distance_to_2pi_multiple(double radians);

}  // namespace fragile
