#include "fragile/separability.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "fragile/constructions.hpp"
#include "fragile/errors.hpp"
#include "fragile/phase_torus.hpp"

namespace fragile {
namespace {

std::vector<int> checked_keep(std::span<const int> keep, std::span<const int> system,
                              const char* where) {
  std::set<int> unique;
  for (int p : keep) {
    if (std::find(system.begin(), system.end(), p) == system.end())
      throw std::out_of_range(std::string(where) + ": particle " + std::to_string(p) +
                              " is not part of the system");
    if (!unique.insert(p).second)
      throw std::invalid_argument(std::string(where) + ": repeated particle");
  }
  if (unique.empty() || unique.size() >= system.size())
    throw std::invalid_argument(std::string(where) +
                                ": keep must be a nonempty proper subset of the particles");
  if (static_cast<int>(unique.size()) > kMaxDensityParticles)
    throw DimensionCapExceeded(std::string(where) + ": reduced state exceeds 2^" +
                               std::to_string(kMaxDensityParticles));
  return {unique.begin(), unique.end()};
}

std::vector<int> labels_1_to(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) labels[k] = k + 1;
  return labels;
}

// Bit mask, inside an index over `positions_of` labels, of the given subset.
BasisIndex mask_of(const DensityMatrix& rho, std::span<const int> subset) {
  BasisIndex mask = 0;
  for (int label : subset) mask |= particle_mask(rho.position_of(label), rho.n_particles());
  return mask;
}

void check_split(const DensityMatrix& rho, const BipartiteSplit& split) {
  if (split.side_a.empty() || split.side_b.empty())
    throw std::invalid_argument("bipartite split: both sides must be nonempty");
  std::set<int> all;
  for (int p : split.side_a) all.insert(p);
  for (int p : split.side_b) all.insert(p);
  if (all.size() != split.side_a.size() + split.side_b.size())
    throw std::invalid_argument("bipartite split: sides overlap or repeat a particle");
  if (all != std::set<int>(rho.labels().begin(), rho.labels().end()))
    throw std::invalid_argument("bipartite split: sides must cover the system exactly");
}

Eigen::VectorXcd product_ket(std::span<const double> deltas, std::span<const int> labels,
                             int relative_sign) {
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::VectorXcd ket = Eigen::VectorXcd::Ones(1);
  for (int label : labels) {
    Eigen::Vector2cd factor(std::polar(h, deltas[label - 1]), h * relative_sign);
    Eigen::VectorXcd next(ket.size() * 2);
    for (Eigen::Index i = 0; i < ket.size(); ++i) next.segment<2>(2 * i) = ket(i) * factor;
    ket = std::move(next);
  }
  return ket;
}

double off_diagonal_max(const Eigen::MatrixXcd& m) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (i != j) worst = std::max(worst, std::abs(m(i, j)));
  return worst;
}

}  // namespace

DensityMatrix partial_trace(const StateVector& s, std::span<const int> keep) {
  const int n = s.n_particles();
  const auto all = labels_1_to(n);
  const auto kept = checked_keep(keep, all, "partial_trace");
  std::vector<int> traced;
  for (int p : all)
    if (!std::binary_search(kept.begin(), kept.end(), p)) traced.push_back(p);

  const auto m = static_cast<int>(kept.size());
  Eigen::MatrixXcd psi(static_cast<Eigen::Index>(dimension_of(m)),
                       static_cast<Eigen::Index>(dimension_of(n - m)));
  for (BasisIndex i = 0; i < dimension_of(n); ++i) {
    BasisIndex r = 0;
    BasisIndex c = 0;
    for (int p : kept) r = (r << 1) | (is_down(i, p, n) ? 1U : 0U);
    for (int p : traced) c = (c << 1) | (is_down(i, p, n) ? 1U : 0U);
    psi(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = s[i];
  }
  return DensityMatrix(kept, psi * psi.adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const auto kept = checked_keep(keep, rho.labels(), "partial_trace");
  const int m = rho.n_particles();
  std::vector<int> kept_pos;
  std::vector<int> traced_pos;
  for (int label : rho.labels()) {
    const int pos = rho.position_of(label);
    if (std::binary_search(kept.begin(), kept.end(), label))
      kept_pos.push_back(pos);
    else
      traced_pos.push_back(pos);
  }
  // kept labels ascending, positions in the same order
  std::sort(kept_pos.begin(), kept_pos.end(), [&](int a, int b) {
    return rho.labels()[a - 1] < rho.labels()[b - 1];
  });

  auto compose = [&](BasisIndex r, BasisIndex c) {
    BasisIndex idx = 0;
    const int mk = static_cast<int>(kept_pos.size());
    const int mt = static_cast<int>(traced_pos.size());
    for (int j = 0; j < mk; ++j)
      if ((r >> (mk - 1 - j)) & 1U) idx |= particle_mask(kept_pos[j], m);
    for (int j = 0; j < mt; ++j)
      if ((c >> (mt - 1 - j)) & 1U) idx |= particle_mask(traced_pos[j], m);
    return static_cast<Eigen::Index>(idx);
  };

  const auto dk = dimension_of(static_cast<int>(kept_pos.size()));
  const auto dt = dimension_of(static_cast<int>(traced_pos.size()));
  Eigen::MatrixXcd reduced = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dk),
                                                    static_cast<Eigen::Index>(dk));
  for (BasisIndex r = 0; r < dk; ++r)
    for (BasisIndex r2 = 0; r2 < dk; ++r2) {
      std::complex<double> sum = 0.0;
      for (BasisIndex c = 0; c < dt; ++c) sum += rho(compose(r, c), compose(r2, c));
      reduced(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r2)) = sum;
    }
  return DensityMatrix(kept, std::move(reduced));
}

std::vector<BipartiteSplit> bipartite_splits(std::span<const int> labels) {
  if (labels.size() < 2) throw std::invalid_argument("bipartite_splits: need two particles");
  const auto rest = static_cast<int>(labels.size()) - 1;
  std::vector<BipartiteSplit> splits;
  for (BasisIndex mask = 1; mask < dimension_of(rest); ++mask) {
    BipartiteSplit split;
    split.side_a.push_back(labels[0]);
    for (int j = 0; j < rest; ++j) {
      const bool in_b = (mask >> (rest - 1 - j)) & 1U;
      (in_b ? split.side_b : split.side_a).push_back(labels[j + 1]);
    }
    splits.push_back(std::move(split));
  }
  return splits;
}

Eigen::MatrixXcd partial_transpose(const DensityMatrix& rho, const BipartiteSplit& split) {
  check_split(rho, split);
  const BasisIndex mb = mask_of(rho, split.side_b);
  const Eigen::Index d = rho.dim();
  Eigen::MatrixXcd out(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      const auto ui = static_cast<BasisIndex>(i);
      const auto uj = static_cast<BasisIndex>(j);
      const auto src_i = static_cast<Eigen::Index>((ui & ~mb) | (uj & mb));
      const auto src_j = static_cast<Eigen::Index>((uj & ~mb) | (ui & mb));
      out(i, j) = rho(src_i, src_j);
    }
  return out;
}

double ppt_min_eigenvalue(const DensityMatrix& rho, const BipartiteSplit& split) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(partial_transpose(rho, split),
                                                                Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("ppt_min_eigenvalue: eigensolver did not converge");
  return solver.eigenvalues().minCoeff();
}

bool ppt_nonnegative(const DensityMatrix& rho, const BipartiteSplit& split, double tol) {
  Eigen::MatrixXcd shifted = partial_transpose(rho, split);
  shifted.diagonal().array() += tol;
  return shifted.llt().info() == Eigen::Success;
}

OrbitDecomposition ghz_orbit_separable_decomposition(const StateVector& s, int traced) {
  const int n = s.n_particles();
  if (n < 3) throw std::invalid_argument("ghz_orbit_separable_decomposition: N must be >= 3");
  detail::check_particle(traced, n, "ghz_orbit_separable_decomposition");

  std::vector<double> phases;
  for (BasisIndex label : odd_parity_labels(n)) phases.push_back(std::arg(s[label]));
  const auto fit = best_orbit_fit(n, TermPhaseVector(n, std::move(phases)));

  std::vector<int> keep;
  for (int k = 1; k <= n; ++k)
    if (k != traced) keep.push_back(k);
  const auto reduced = partial_trace(s, keep);

  // With alpha = delta and beta = 0 the x-basis GHZ factors become
  // (e^{i delta_k}|u> +- |d>)/sqrt2; the cross terms vanish under the trace.
  const auto ket1 = product_ket(fit.deltas, keep, +1);
  const auto ket2 = product_ket(fit.deltas, keep, -1);
  const Eigen::MatrixXcd mixture =
      0.5 * (ket1 * ket1.adjoint()) + 0.5 * (ket2 * ket2.adjoint());
  const double residual = (mixture - reduced.entries()).cwiseAbs().maxCoeff();
  return {keep, StateVector(n - 1, ket1), StateVector(n - 1, ket2), residual};
}

const char* to_string(SeparabilityVerdict v) {
  switch (v) {
    case SeparabilityVerdict::Separable: return "separable";
    case SeparabilityVerdict::Entangled: return "entangled";
    case SeparabilityVerdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

bool FragilityReport::fragile() const {
  return !per_particle.empty() &&
         std::all_of(per_particle.begin(), per_particle.end(), [](const TracedAnalysis& t) {
           return t.verdict == SeparabilityVerdict::Separable;
         });
}

FragilityReport fragility_report(const StateVector& s, const Tolerances& tol) {
  const int n = s.n_particles();
  if (n < 2 || n > kMaxDensityParticles - 1)
    throw DimensionCapExceeded("fragility_report: N must lie in [2, " +
                               std::to_string(kMaxDensityParticles - 1) + "]");
  FragilityReport report;
  report.n_particles = n;
  for (int traced = 1; traced <= n; ++traced) {
    TracedAnalysis analysis;
    analysis.traced = traced;
    std::vector<int> keep;
    for (int k = 1; k <= n; ++k)
      if (k != traced) keep.push_back(k);
    const auto reduced = partial_trace(s, keep);

    bool negative = false;
    if (keep.size() >= 2) {
      for (auto& split : bipartite_splits(keep)) {
        const double lambda = ppt_min_eigenvalue(reduced, split);
        negative = negative || lambda < -tol.eigenvalue;
        analysis.splits.push_back({std::move(split), lambda});
      }
    }

    // A reduced state diagonal in the product basis is a mixture of product kets.
    analysis.residual = off_diagonal_max(reduced.entries());
    analysis.decomposition = "product_basis";
    if (n >= 3) {
      const double orbit = ghz_orbit_separable_decomposition(s, traced).residual;
      if (orbit < *analysis.residual) {
        analysis.residual = orbit;
        analysis.decomposition = "ghz_orbit";
      }
    }

    if (negative)
      analysis.verdict = SeparabilityVerdict::Entangled;
    else if (keep.size() <= 2 || *analysis.residual < tol.residual)
      analysis.verdict = SeparabilityVerdict::Separable;
    else
      analysis.verdict = SeparabilityVerdict::Inconclusive;
    report.per_particle.push_back(std::move(analysis));
  }
  return report;
}

}  // namespace fragile
