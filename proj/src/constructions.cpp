#include "fragile/constructions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fragile {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_bernstein_range(int n, const char* where) {
  if (n < 3 || n > kMaxStateParticles)
    throw std::out_of_range(std::string(where) + ": N must lie in [3, " +
                            std::to_string(kMaxStateParticles) + "]");
}

double term_phase(const PhaseAssignment& p, BasisIndex index, int n) {
  double phase = 0.0;
  for (int k = 1; k <= n; ++k)
    phase += is_down(index, k, n) ? p.betas[k - 1] : p.alphas[k - 1];
  return phase;
}

void check_assignment(const PhaseAssignment& p, int n) {
  if (static_cast<int>(p.alphas.size()) != n || static_cast<int>(p.betas.size()) != n)
    throw std::invalid_argument("phase assignment: expected " + std::to_string(n) +
                                " alphas and betas");
  for (std::size_t k = 0; k < p.alphas.size(); ++k)
    if (!std::isfinite(p.alphas[k]) || !std::isfinite(p.betas[k]))
      throw std::invalid_argument("phase assignment: angles must be finite");
}

}  // namespace

std::vector<double> PhaseAssignment::deltas() const {
  if (alphas.size() != betas.size())
    throw std::invalid_argument("phase assignment: alphas and betas differ in length");
  std::vector<double> d(alphas.size());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = alphas[k] - betas[k];
  return d;
}

double reduce_angle(double radians) {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

TermPhaseVector::TermPhaseVector(int n_particles, std::vector<double> phases)
    : n_(n_particles), phases_(std::move(phases)) {
  if (n_ < 1 || n_ > kMaxStateParticles)
    throw std::out_of_range("term phase vector: N out of range");
  if (phases_.size() != dimension_of(n_) / 2)
    throw std::invalid_argument("term phase vector: expected 2^(N-1) = " +
                                std::to_string(dimension_of(n_) / 2) + " phases, got " +
                                std::to_string(phases_.size()));
  for (double& a : phases_) {
    if (!std::isfinite(a)) throw std::invalid_argument("term phase vector: non-finite angle");
    a = reduce_angle(a);
  }
}

TermPhaseVector TermPhaseVector::zeros(int n_particles) {
  return TermPhaseVector(n_particles,
                         std::vector<double>(dimension_of(n_particles) / 2, 0.0));
}

std::vector<BasisIndex> odd_parity_labels(int n_particles) {
  std::vector<BasisIndex> labels;
  labels.reserve(dimension_of(n_particles) / 2);
  for (BasisIndex i = 0; i < dimension_of(n_particles); ++i)
    if (down_count(i) % 2 == 1) labels.push_back(i);
  return labels;
}

StateVector special_bernstein(int n_particles) {
  check_bernstein_range(n_particles, "special_bernstein");
  return general_bernstein(n_particles, TermPhaseVector::zeros(n_particles));
}

StateVector general_bernstein(int n_particles, const TermPhaseVector& phases) {
  check_bernstein_range(n_particles, "general_bernstein");
  if (phases.n_particles() != n_particles)
    throw std::invalid_argument("general_bernstein: phase vector built for a different N");
  const double modulus = std::pow(2.0, -(n_particles - 1) / 2.0);
  StateVector::Vector amps =
      StateVector::Vector::Zero(static_cast<Eigen::Index>(dimension_of(n_particles)));
  const auto labels = odd_parity_labels(n_particles);
  for (std::size_t t = 0; t < labels.size(); ++t)
    amps(static_cast<Eigen::Index>(labels[t])) = std::polar(modulus, phases[t]);
  return StateVector(n_particles, std::move(amps));
}

StateVector ghz(int n_particles, Axis axis, int relative_sign) {
  if (n_particles < 2 || n_particles > kMaxStateParticles)
    throw std::out_of_range("ghz: N must lie in [2, " + std::to_string(kMaxStateParticles) + "]");
  if (relative_sign != 1 && relative_sign != -1)
    throw std::invalid_argument("ghz: relative sign must be +1 or -1");
  if (axis == Axis::Y) throw std::invalid_argument("ghz: only the X and Z axes are supported");

  const auto dim = static_cast<Eigen::Index>(dimension_of(n_particles));
  StateVector::Vector amps = StateVector::Vector::Zero(dim);
  amps(0) = 1.0;
  amps(dim - 1) = static_cast<double>(relative_sign);
  StateVector z_form(n_particles, std::move(amps));
  // The x-basis form in z coordinates is the inverse basis change of the z form.
  return axis == Axis::Z ? z_form : basis_change_z_to_x(z_form);
}

StateVector inhomogeneous_bernstein3(double q) {
  if (!(q > 0.0 && q <= 0.5))
    throw std::out_of_range("inhomogeneous_bernstein3: q must lie in (0, 1/2]");
  const double one_down = q;
  const double two_down = std::sqrt(q * (1.0 - 2.0 * q));
  const double three_down = std::sqrt(1.0 - 3.0 * q * (1.0 - q));
  StateVector::Vector amps = StateVector::Vector::Zero(8);
  for (BasisIndex i : {0b001, 0b010, 0b100}) amps(static_cast<Eigen::Index>(i)) = one_down;
  for (BasisIndex i : {0b011, 0b101, 0b110}) amps(static_cast<Eigen::Index>(i)) = two_down;
  amps(7) = three_down;
  return StateVector(3, std::move(amps));
}

StateVector local_phase_transform(const StateVector& s, const PhaseAssignment& p) {
  const int n = s.n_particles();
  check_assignment(p, n);
  auto amps = s.amplitudes();
  for (BasisIndex i = 0; i < dimension_of(n); ++i)
    amps(static_cast<Eigen::Index>(i)) *= std::polar(1.0, term_phase(p, i, n));
  return StateVector(n, std::move(amps));
}

TermPhaseVector push_forward(const PhaseAssignment& p) {
  const int n = p.n_particles();
  check_bernstein_range(n, "push_forward");
  check_assignment(p, n);
  std::vector<double> phases;
  for (BasisIndex label : odd_parity_labels(n)) phases.push_back(term_phase(p, label, n));
  return TermPhaseVector(n, std::move(phases));
}

}  // namespace fragile
