#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fragile/qstate.hpp"
#include "fragile/tolerances.hpp"

namespace fragile {

struct Outcome {
  int particle;  // 1-based label
  Axis axis;
  int sign;  // +1 or -1
};

// A joint projective event such as (+ . +): one (axis, sign) per listed particle.
class OutcomeQuery {
 public:
  explicit OutcomeQuery(std::vector<Outcome> entries);

  // All particles of an N-particle system measured along `axes` with the given signs.
  static OutcomeQuery all(std::span<const Axis> axes, std::span<const int> signs);

  const std::vector<Outcome>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  // Throws unless every particle lies in 1..n.
  void validate(int n_particles) const;
  bool overlaps(const OutcomeQuery& other) const;

  // Event notation over n particles, e.g. "(+•-)"; unmeasured particles show as a bullet.
  std::string to_string(int n_particles) const;

 private:
  std::vector<Outcome> entries_;
};

// p_i = |a_i|^2 over the 2^N sigma_z labels.
std::vector<double> outcome_distribution(const StateVector& s);

double joint_probability(const StateVector& s, const OutcomeQuery& q);

// Marginal of the z-basis distribution on `subset`; the first listed particle
// is the most significant bit of the returned table's index.
std::vector<double> marginal_table(const StateVector& s, std::span<const int> subset);

// Every marginal of a 2^N distribution at once: entry index is read in base 3
// with particle 1 as the most significant digit, digit 0 = Up, 1 = Down,
// 2 = summed out. Built with one pass per particle over the 3^N table.
class MarginalCube {
 public:
  MarginalCube(int n_particles, std::span<const double> distribution);

  int n_particles() const noexcept { return n_; }
  // `digits[k]` in {0, 1, 2} for particle k + 1.
  double at(std::span<const std::uint8_t> digits) const;
  double at_index(std::size_t ternary_index) const { return table_[ternary_index]; }
  std::size_t size() const noexcept { return table_.size(); }

 private:
  int n_;
  std::vector<double> table_;
};

struct SizeVerdict {
  int size = 0;
  bool independent = true;
  double worst_deviation = 0.0;
  // Lexicographically first failing event; present iff !independent.
  std::optional<OutcomeQuery> witness;
  double witness_joint = 0.0;
  double witness_product = 0.0;
};

struct IndependenceReport {
  int n_particles = 0;
  std::vector<Axis> axes;
  int max_checked = 0;
  std::vector<SizeVerdict> per_size;  // sizes 2..max_checked
  double n_wise_joint = 0.0;          // P(+ + ... +)
  double n_wise_product = 0.0;        // product of the single P(+)
  std::vector<double> single_up;      // P(+) per particle

  bool independent_through(int k) const;
};

// Compares every joint outcome over subsets of size <= max_k with the product
// of single-particle probabilities. Sizes are swept in increasing order and the
// sweep stops after the first dependent size.
IndependenceReport kwise_independence_report(const StateVector& s, std::span<const Axis> axes,
                                             int max_k, const Tolerances& tol = {});

enum class CertificateReason { Support, Modulus, Independence, NWise };

const char* to_string(CertificateReason r);

struct BernsteinVerdict {
  bool is_bernstein = false;
  // First failing structural check (support, then modulus).
  std::optional<CertificateReason> reason;
  // Failure seen by the statistical route (independence, then n-wise).
  std::optional<CertificateReason> statistics_reason;
};

// Structural route: support is exactly the odd-Down-parity labels, every
// modulus equals 2^{-(N-1)/2}. Statistical route: singles 1/2, independence
// through N-1, P(+...+) = 0. Throws InternalInconsistency if they disagree.
BernsteinVerdict bernstein_certificate(const StateVector& s, const Tolerances& tol = {});

struct CorrelationResult {
  double p1 = 0.0;
  double p2 = 0.0;
  double p12 = 0.0;
  bool independent = false;
};

// tr(pi_1 rho), tr(pi_2 rho), tr(pi_1 pi_2 rho); particles refer to rho's labels.
CorrelationResult correlation_check(const DensityMatrix& rho, const OutcomeQuery& q1,
                                    const OutcomeQuery& q2, const Tolerances& tol = {});

// tr(pi rho) for a product projector.
double expectation(const DensityMatrix& rho, const OutcomeQuery& q);

}  // namespace fragile
