#pragma once

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "fragile/constructions.hpp"
#include "fragile/qstate.hpp"

namespace testing_support {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240611);
  return engine;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline fragile::StateVector random_state(int n) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(static_cast<Eigen::Index>(fragile::dimension_of(n)));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = {g(rng()), g(rng())};
  return fragile::StateVector(n, v);
}

inline fragile::PhaseAssignment random_assignment(int n) {
  fragile::PhaseAssignment p;
  for (int k = 0; k < n; ++k) {
    p.alphas.push_back(uniform(-M_PI, M_PI));
    p.betas.push_back(uniform(-M_PI, M_PI));
  }
  return p;
}

inline fragile::TermPhaseVector random_phases(int n) {
  std::vector<double> t(fragile::dimension_of(n) / 2);
  for (double& a : t) a = uniform(0.0, 2 * M_PI);
  return fragile::TermPhaseVector(n, t);
}

inline double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace testing_support
