#include "fragile/phase_torus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace fragile {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_n(int n, const char* where) {
  if (n < 3 || n > kMaxStateParticles)
    throw std::out_of_range(std::string(where) + ": N must lie in [3, " +
                            std::to_string(kMaxStateParticles) + "]");
}

long long floor_mod(long long a, long long m) {
  const long long r = a % m;
  return r < 0 ? r + m : r;
}

// Position of `label` within the increasing list of odd-parity labels.
std::size_t odd_position(const std::vector<BasisIndex>& labels, BasisIndex label) {
  const auto it = std::lower_bound(labels.begin(), labels.end(), label);
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

RationalVector RationalVector::reduced(Eigen::VectorXi numerators, int denominator) {
  if (denominator == 0) throw std::invalid_argument("rational vector: zero denominator");
  if (denominator < 0) {
    numerators = -numerators;
    denominator = -denominator;
  }
  int g = denominator;
  for (Eigen::Index i = 0; i < numerators.size(); ++i) g = std::gcd(g, numerators(i));
  if (g > 1) {
    numerators /= g;
    denominator /= g;
  }
  return {std::move(numerators), denominator};
}

bool RationalVector::operator==(const RationalVector& other) const {
  return denominator == other.denominator && numerators == other.numerators;
}

bool PhaseShiftSystem::verify_exact() const {
  const Eigen::MatrixXi product = forward * inverse_numerators;
  return product == Eigen::MatrixXi::Identity(n, n) * inverse_denominator;
}

PhaseShiftSystem phase_shift_system(int n) {
  check_n(n, "phase_shift_system");
  PhaseShiftSystem sys;
  sys.n = n;

  // All ones with a zero anti-diagonal; for even N subtract one down the last column.
  sys.forward = Eigen::MatrixXi::Ones(n, n);
  for (int j = 0; j < n; ++j) sys.forward(j, n - 1 - j) = 0;
  if (n % 2 == 0) sys.forward.col(n - 1).array() -= 1;

  if (n % 2 == 1) {
    // (1/(N-1)) * (ones with 2-N on the anti-diagonal)
    sys.inverse_denominator = n - 1;
    sys.inverse_numerators = Eigen::MatrixXi::Ones(n, n);
    for (int j = 0; j < n; ++j) sys.inverse_numerators(j, n - 1 - j) = 2 - n;
  } else {
    // (1/(N-2)) * first column zero except 2-N at the bottom, 3-N on the
    // remaining anti-diagonal, ones elsewhere.
    sys.inverse_denominator = n - 2;
    sys.inverse_numerators = Eigen::MatrixXi::Ones(n, n);
    sys.inverse_numerators.col(0).setZero();
    for (int j = 0; j < n - 1; ++j) sys.inverse_numerators(j, n - 1 - j) = 3 - n;
    sys.inverse_numerators(n - 1, 0) = 2 - n;
  }
  return sys;
}

Eigen::VectorXi phase_shift_coefficients(BasisIndex label, int n) {
  Eigen::VectorXi row = Eigen::VectorXi::Zero(n + 1);
  row(0) = 1;
  const int last_free = n % 2 == 1 ? n : n - 1;
  for (int k = 1; k <= last_free; ++k)
    if (!is_down(label, k, n)) row(k) = 1;
  if (n % 2 == 0 && is_down(label, n, n)) row(n) = -1;
  return row;
}

PeriodLattice period_lattice(int n) {
  const auto sys = phase_shift_system(n);
  PeriodLattice lattice;
  lattice.n = n;
  for (int j = 0; j < n; ++j)
    lattice.generators.push_back(RationalVector::reduced(
        Eigen::VectorXi(2 * sys.inverse_numerators.col(j)), sys.inverse_denominator));
  return lattice;
}

bool is_state_period(int n, const RationalVector& shift_in_pi) {
  check_n(n, "is_state_period");
  if (shift_in_pi.numerators.size() != n)
    throw std::invalid_argument("is_state_period: shift must have N entries");
  // Term phase in units of pi/denominator; projective equality asks all of
  // them to agree modulo 2*denominator.
  const long long modulus = 2LL * shift_in_pi.denominator;
  std::optional<long long> reference;
  for (BasisIndex label : odd_parity_labels(n)) {
    long long phase = 0;
    for (int k = 1; k <= n; ++k)
      if (!is_down(label, k, n)) phase += shift_in_pi.numerators(k - 1);
    phase = floor_mod(phase, modulus);
    if (!reference)
      reference = phase;
    else if (*reference != phase)
      return false;
  }
  return true;
}

double distance_to_2pi_multiple(double radians) {
  const double r = std::remainder(radians, kTwoPi);
  return std::abs(r);
}

OrbitFit best_orbit_fit(int n, const TermPhaseVector& t) {
  check_n(n, "orbit_membership");
  if (t.n_particles() != n || t.size() != dimension_of(n) / 2)
    throw std::invalid_argument("orbit_membership: phase vector must have 2^(N-1) entries");

  const auto labels = odd_parity_labels(n);
  // Reference terms: the N single-down terms (increasing index) and the
  // lowest-index three-down term, which is the all-down term when N = 3.
  std::vector<BasisIndex> reference;
  for (int j = 1; j <= n; ++j) reference.push_back(particle_mask(n + 1 - j, n));
  reference.push_back(0b111);

  const int unknowns = n + 1;
  Eigen::MatrixXd system(unknowns, unknowns);
  Eigen::VectorXd rhs(unknowns);
  for (int r = 0; r < unknowns; ++r) {
    system.row(r) = phase_shift_coefficients(reference[r], n).cast<double>().transpose();
    rhs(r) = t[odd_position(labels, reference[r])];
  }
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
  const auto det = std::llround(std::abs(lu.determinant()));
  if (det == 0) throw InternalInconsistency("orbit_membership: reference system is singular");
  const Eigen::MatrixXd inverse = lu.inverse();
  const Eigen::VectorXd base = inverse * rhs;

  // The reference equations hold modulo 2*pi only, so the solution is known up
  // to 2*pi * inverse * (integer vector). Modulo 2*pi these form a finite group
  // of order det; enumerate it exactly in units of 2*pi/det.
  std::vector<std::vector<long long>> columns;
  for (int j = 0; j < unknowns; ++j) {
    std::vector<long long> col(static_cast<std::size_t>(unknowns));
    for (int i = 0; i < unknowns; ++i)
      col[i] = floor_mod(std::llround(inverse(i, j) * static_cast<double>(det)), det);
    columns.push_back(std::move(col));
  }
  std::set<std::vector<long long>> group{std::vector<long long>(unknowns, 0)};
  std::vector<std::vector<long long>> frontier(group.begin(), group.end());
  while (!frontier.empty()) {
    std::vector<std::vector<long long>> next;
    for (const auto& g : frontier)
      for (const auto& col : columns) {
        std::vector<long long> sum(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) sum[i] = floor_mod(g[i] + col[i], det);
        if (group.insert(sum).second) next.push_back(std::move(sum));
      }
    frontier = std::move(next);
  }

  std::vector<Eigen::VectorXi> coefficients;
  coefficients.reserve(labels.size());
  for (BasisIndex label : labels) coefficients.push_back(phase_shift_coefficients(label, n));

  OrbitFit best;
  best.max_residual_mod_2pi = std::numeric_limits<double>::infinity();
  for (const auto& g : group) {
    Eigen::VectorXd x = base;
    for (int i = 0; i < unknowns; ++i)
      x(i) += kTwoPi * static_cast<double>(g[i]) / static_cast<double>(det);
    double worst = 0.0;
    for (std::size_t T = 0; T < labels.size(); ++T) {
      const double predicted = coefficients[T].cast<double>().dot(x);
      worst = std::max(worst, distance_to_2pi_multiple(t[T] - predicted));
    }
    if (worst < best.max_residual_mod_2pi) {
      best.max_residual_mod_2pi = worst;
      best.constant = x(0);
      best.deltas.assign(x.data() + 1, x.data() + unknowns);
    }
  }
  return best;
}

OrbitMembership orbit_membership(int n, const TermPhaseVector& t, const Tolerances& tol) {
  auto fit = best_orbit_fit(n, t);
  OrbitMembership m;
  m.constant = fit.constant;
  m.max_residual_mod_2pi = fit.max_residual_mod_2pi;
  m.reachable = fit.max_residual_mod_2pi < tol.phase;
  if (m.reachable) m.deltas = std::move(fit.deltas);
  return m;
}

DimensionGap dimension_gap(int n) {
  if (n < 3 || n > 63) throw std::out_of_range("dimension_gap: N must lie in [3, 63]");
  return {n, (std::uint64_t{1} << (n - 1)) - 1};
}

}  // namespace fragile
