#include "fragile/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "fragile/errors.hpp"

namespace fragile {
namespace {

// Above this the 3^N marginal table stops fitting comfortably in memory.
constexpr int kCubeMaxParticles = 14;

std::size_t pow3(int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}

// z-basis distribution after rotating each particle's measurement axis onto z.
std::vector<double> rotated_distribution(const StateVector& s, std::span<const Axis> axes) {
  auto amps = s.amplitudes();
  for (int k = 1; k <= s.n_particles(); ++k) {
    const Axis a = axes[k - 1];
    if (a != Axis::Z)
      detail::apply_single(amps, k, s.n_particles(), Matrix2c<double>(eigenbasis(a).adjoint()));
  }
  std::vector<double> p(static_cast<std::size_t>(amps.size()));
  for (Eigen::Index i = 0; i < amps.size(); ++i) p[i] = std::norm(amps(i));
  return p;
}

// Lexicographic k-combinations of 1..n.
template <typename F>
void for_each_combination(int n, int k, F&& visit) {
  std::vector<int> combo(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) combo[i] = i + 1;
  while (true) {
    visit(std::span<const int>(combo));
    int i = k - 1;
    while (i >= 0 && combo[i] == n - k + i + 1) --i;
    if (i < 0) return;
    ++combo[i];
    for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
}

std::vector<double> marginal_from(std::span<const double> dist, int n,
                                  std::span<const int> subset) {
  const int m = static_cast<int>(subset.size());
  std::vector<double> table(dimension_of(m), 0.0);
  for (BasisIndex i = 0; i < dist.size(); ++i) {
    BasisIndex j = 0;
    for (int p : subset) j = (j << 1) | (is_down(i, p, n) ? 1U : 0U);
    table[j] += dist[i];
  }
  return table;
}

void check_subset(std::span<const int> subset, int n, const char* where) {
  if (subset.empty()) throw std::invalid_argument(std::string(where) + ": empty subset");
  std::set<int> seen;
  for (int p : subset) {
    detail::check_particle(p, n, where);
    if (!seen.insert(p).second)
      throw std::invalid_argument(std::string(where) + ": repeated particle");
  }
}

}  // namespace

OutcomeQuery::OutcomeQuery(std::vector<Outcome> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("outcome query: no entries");
  std::set<int> seen;
  for (const auto& e : entries_) {
    if (e.sign != 1 && e.sign != -1)
      throw std::invalid_argument("outcome query: sign must be +1 or -1");
    if (e.particle < 1) throw std::out_of_range("outcome query: particle labels start at 1");
    if (!seen.insert(e.particle).second)
      throw std::invalid_argument("outcome query: duplicate particle " +
                                  std::to_string(e.particle));
  }
}

OutcomeQuery OutcomeQuery::all(std::span<const Axis> axes, std::span<const int> signs) {
  if (axes.size() != signs.size())
    throw std::invalid_argument("outcome query: axes and signs differ in length");
  std::vector<Outcome> entries;
  for (std::size_t k = 0; k < axes.size(); ++k)
    entries.push_back({static_cast<int>(k) + 1, axes[k], signs[k]});
  return OutcomeQuery(std::move(entries));
}

void OutcomeQuery::validate(int n_particles) const {
  if (entries_.size() > static_cast<std::size_t>(n_particles))
    throw std::invalid_argument("outcome query: more entries than particles");
  for (const auto& e : entries_) detail::check_particle(e.particle, n_particles, "outcome query");
}

bool OutcomeQuery::overlaps(const OutcomeQuery& other) const {
  for (const auto& a : entries_)
    for (const auto& b : other.entries_)
      if (a.particle == b.particle) return true;
  return false;
}

std::string OutcomeQuery::to_string(int n_particles) const {
  std::vector<std::string> slots(static_cast<std::size_t>(n_particles), "\xE2\x80\xA2");
  for (const auto& e : entries_)
    if (e.particle >= 1 && e.particle <= n_particles)
      slots[e.particle - 1] = e.sign > 0 ? "+" : "-";
  std::string out = "(";
  for (const auto& s : slots) out += s;
  return out + ")";
}

std::vector<double> outcome_distribution(const StateVector& s) {
  std::vector<double> p(static_cast<std::size_t>(s.dim()));
  for (Eigen::Index i = 0; i < s.dim(); ++i) p[i] = std::norm(s.amplitudes()(i));
  return p;
}

double joint_probability(const StateVector& s, const OutcomeQuery& q) {
  const int n = s.n_particles();
  q.validate(n);
  auto amps = s.amplitudes();
  BasisIndex mask = 0;
  BasisIndex want = 0;
  for (const auto& e : q.entries()) {
    if (e.axis != Axis::Z)
      detail::apply_single(amps, e.particle, n, Matrix2c<double>(eigenbasis(e.axis).adjoint()));
    mask |= particle_mask(e.particle, n);
    if (e.sign < 0) want |= particle_mask(e.particle, n);
  }
  double p = 0.0;
  for (BasisIndex i = 0; i < dimension_of(n); ++i)
    if ((i & mask) == want) p += std::norm(amps(static_cast<Eigen::Index>(i)));
  return p;
}

std::vector<double> marginal_table(const StateVector& s, std::span<const int> subset) {
  check_subset(subset, s.n_particles(), "marginal_table");
  const auto dist = outcome_distribution(s);
  return marginal_from(dist, s.n_particles(), subset);
}

MarginalCube::MarginalCube(int n_particles, std::span<const double> distribution)
    : n_(n_particles) {
  if (n_ < 1 || n_ > kCubeMaxParticles)
    throw DimensionCapExceeded("marginal cube: N must lie in [1, " +
                               std::to_string(kCubeMaxParticles) + "]");
  if (distribution.size() != dimension_of(n_))
    throw std::invalid_argument("marginal cube: distribution length is not 2^N");
  table_.assign(pow3(n_), 0.0);
  for (BasisIndex i = 0; i < distribution.size(); ++i) {
    std::size_t t = 0;
    for (int k = 1; k <= n_; ++k) t = 3 * t + (is_down(i, k, n_) ? 1 : 0);
    table_[t] = distribution[i];
  }
  for (int pos = 0; pos < n_; ++pos) {
    const std::size_t w = pow3(pos);
    for (std::size_t idx = 0; idx < table_.size(); ++idx)
      if ((idx / w) % 3 == 2) table_[idx] = table_[idx - 2 * w] + table_[idx - w];
  }
}

double MarginalCube::at(std::span<const std::uint8_t> digits) const {
  if (digits.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("marginal cube: digit count differs from N");
  std::size_t t = 0;
  for (auto d : digits) {
    if (d > 2) throw std::out_of_range("marginal cube: digit outside {0,1,2}");
    t = 3 * t + d;
  }
  return table_[t];
}

bool IndependenceReport::independent_through(int k) const {
  if (k > max_checked) return false;
  for (const auto& v : per_size)
    if (v.size <= k && !v.independent) return false;
  return true;
}

IndependenceReport kwise_independence_report(const StateVector& s, std::span<const Axis> axes,
                                             int max_k, const Tolerances& tol) {
  const int n = s.n_particles();
  if (static_cast<int>(axes.size()) != n)
    throw std::invalid_argument("kwise_independence_report: need one axis per particle");
  if (max_k < 1 || max_k > n)
    throw std::out_of_range("kwise_independence_report: max_k must lie in [1, N]");

  IndependenceReport report;
  report.n_particles = n;
  report.axes.assign(axes.begin(), axes.end());
  const auto dist = rotated_distribution(s, axes);

  std::optional<MarginalCube> cube;
  if (n <= kCubeMaxParticles) cube.emplace(n, dist);

  // Ternary index with every digit 2 (everything summed out).
  std::size_t all_summed = 0;
  for (int k = 0; k < n; ++k) all_summed = 3 * all_summed + 2;

  // probability of `signs` (bit set = Down, first particle most significant) on `subset`
  auto joint_on = [&](std::span<const int> subset, BasisIndex signs) {
    const int m = static_cast<int>(subset.size());
    if (cube) {
      std::size_t idx = all_summed;
      for (int j = 0; j < m; ++j) {
        const std::size_t digit = (signs >> (m - 1 - j)) & 1U;
        idx -= (2 - digit) * pow3(n - subset[j]);
      }
      return cube->at_index(idx);
    }
    return marginal_from(dist, n, subset)[signs];
  };

  report.single_up.resize(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const int one[] = {k};
    report.single_up[k - 1] = joint_on(one, 0);
  }
  auto single = [&](int particle, bool down) {
    const double up = report.single_up[particle - 1];
    return down ? 1.0 - up : up;
  };

  {
    std::vector<int> everyone(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) everyone[k] = k + 1;
    report.n_wise_joint = joint_on(everyone, 0);
    report.n_wise_product = 1.0;
    for (double p : report.single_up) report.n_wise_product *= p;
  }

  report.max_checked = 1;
  for (int size = 2; size <= max_k; ++size) {
    SizeVerdict verdict;
    verdict.size = size;
    for_each_combination(n, size, [&](std::span<const int> subset) {
      // Per-subset path evaluates one marginal table and reuses it.
      std::vector<double> table;
      if (!cube) table = marginal_from(dist, n, subset);
      for (BasisIndex signs = 0; signs < dimension_of(size); ++signs) {
        const double joint = cube ? joint_on(subset, signs) : table[signs];
        double product = 1.0;
        for (int j = 0; j < size; ++j)
          product *= single(subset[j], ((signs >> (size - 1 - j)) & 1U) != 0);
        const double deviation = std::abs(joint - product);
        verdict.worst_deviation = std::max(verdict.worst_deviation, deviation);
        if (!(deviation < tol.probability) && !verdict.witness) {
          std::vector<Outcome> entries;
          for (int j = 0; j < size; ++j)
            entries.push_back({subset[j], axes[subset[j] - 1],
                               ((signs >> (size - 1 - j)) & 1U) ? -1 : 1});
          verdict.witness.emplace(std::move(entries));
          verdict.witness_joint = joint;
          verdict.witness_product = product;
        }
      }
    });
    verdict.independent = !verdict.witness.has_value();
    report.per_size.push_back(std::move(verdict));
    report.max_checked = size;
    if (!report.per_size.back().independent) break;
  }
  return report;
}

const char* to_string(CertificateReason r) {
  switch (r) {
    case CertificateReason::Support: return "support";
    case CertificateReason::Modulus: return "modulus";
    case CertificateReason::Independence: return "independence";
    case CertificateReason::NWise: return "n_wise";
  }
  return "unknown";
}

BernsteinVerdict bernstein_certificate(const StateVector& s, const Tolerances& tol) {
  const int n = s.n_particles();
  if (n < 3) throw std::invalid_argument("bernstein_certificate: N must be at least 3");

  BernsteinVerdict verdict;
  const double modulus = std::pow(2.0, -(n - 1) / 2.0);
  bool support_ok = true;
  bool modulus_ok = true;
  for (BasisIndex i = 0; i < dimension_of(n); ++i) {
    const double a = std::abs(s[i]);
    const bool odd = down_count(i) % 2 == 1;
    if ((a > tol.probability) != odd) support_ok = false;
    if (odd && std::abs(a - modulus) > tol.probability) modulus_ok = false;
  }
  if (!support_ok)
    verdict.reason = CertificateReason::Support;
  else if (!modulus_ok)
    verdict.reason = CertificateReason::Modulus;

  const std::vector<Axis> all_z(static_cast<std::size_t>(n), Axis::Z);
  const auto report = kwise_independence_report(s, all_z, n, tol);
  bool symmetric = true;
  for (double p : report.single_up)
    if (std::abs(p - 0.5) >= tol.probability) symmetric = false;
  if (!symmetric || !report.independent_through(n - 1))
    verdict.statistics_reason = CertificateReason::Independence;
  else if (!(report.n_wise_joint < tol.probability))
    verdict.statistics_reason = CertificateReason::NWise;

  const bool structural = !verdict.reason.has_value();
  const bool statistical = !verdict.statistics_reason.has_value();
  if (structural != statistical)
    throw InternalInconsistency(
        std::string("bernstein_certificate: structural check ") +
        (structural ? "passed" : "failed") + " but statistical check " +
        (statistical ? "passed" : "failed"));
  verdict.is_bernstein = structural;
  return verdict;
}

double expectation(const DensityMatrix& rho, const OutcomeQuery& q) {
  const int m = rho.n_particles();
  DensityMatrix::Matrix work = rho.entries();
  for (const auto& e : q.entries()) {
    const int pos = rho.position_of(e.particle);
    const Matrix2c<double> proj = projector(e.axis, e.sign);
    for (Eigen::Index j = 0; j < work.cols(); ++j) {
      auto column = work.col(j);
      detail::apply_single(column, pos, m, proj);
    }
  }
  return work.trace().real();
}

CorrelationResult correlation_check(const DensityMatrix& rho, const OutcomeQuery& q1,
                                    const OutcomeQuery& q2, const Tolerances& tol) {
  if (q1.overlaps(q2)) throw std::invalid_argument("correlation_check: queries share a particle");
  CorrelationResult r;
  r.p1 = expectation(rho, q1);
  r.p2 = expectation(rho, q2);
  std::vector<Outcome> both = q1.entries();
  both.insert(both.end(), q2.entries().begin(), q2.entries().end());
  r.p12 = expectation(rho, OutcomeQuery(std::move(both)));
  r.independent = std::abs(r.p12 - r.p1 * r.p2) < tol.probability;
  return r;
}

}  // namespace fragile
