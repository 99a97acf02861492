#pragma once

// Dense N-particle spin-1/2 states in the sigma_z product basis.
//
// Basis convention: particle 1 is the most significant bit of a basis index,
// Up encodes 0 and Down encodes 1, so index 0b001 of a three-particle system
// is |up up down>. Particles are labelled 1..N throughout the library.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "fragile/errors.hpp"
#include "fragile/tolerances.hpp"

namespace fragile {

enum class Spin : std::uint8_t { Up = 0, Down = 1 };
enum class Axis : std::uint8_t { X, Y, Z };

using BasisIndex = std::uint64_t;

inline char axis_char(Axis a) {
  switch (a) {
    case Axis::X: return 'x';
    case Axis::Y: return 'y';
    case Axis::Z: return 'z';
  }
  return '?';
}

inline Axis axis_from_char(char c) {
  switch (c) {
    case 'x': case 'X': return Axis::X;
    case 'y': case 'Y': return Axis::Y;
    case 'z': case 'Z': return Axis::Z;
    default: break;
  }
  throw std::invalid_argument(std::string("unknown axis '") + c + "'");
}

inline std::vector<Axis> parse_axes(std::string_view text) {
  std::vector<Axis> axes;
  axes.reserve(text.size());
  for (char c : text) axes.push_back(axis_from_char(c));
  return axes;
}

constexpr BasisIndex dimension_of(int n_particles) {
  return BasisIndex{1} << n_particles;
}

// Bit mask selecting the given particle (1-based) inside an N-particle index.
constexpr BasisIndex particle_mask(int particle, int n_particles) {
  return BasisIndex{1} << (n_particles - particle);
}

constexpr bool is_down(BasisIndex index, int particle, int n_particles) {
  return (index & particle_mask(particle, n_particles)) != 0;
}

inline int down_count(BasisIndex index) { return std::popcount(index); }

inline BasisIndex basis_index(std::span<const Spin> pattern) {
  if (pattern.empty()) throw std::invalid_argument("basis_index: empty pattern");
  if (pattern.size() > 63) throw DimensionCapExceeded("basis_index: pattern too long");
  BasisIndex index = 0;
  for (Spin s : pattern) index = (index << 1) | static_cast<BasisIndex>(s);
  return index;
}

inline std::vector<Spin> basis_pattern(BasisIndex index, int n_particles) {
  if (n_particles < 1 || index >= dimension_of(n_particles))
    throw std::out_of_range("basis_pattern: index outside 2^N");
  std::vector<Spin> pattern(static_cast<std::size_t>(n_particles));
  for (int k = 1; k <= n_particles; ++k)
    pattern[k - 1] = is_down(index, k, n_particles) ? Spin::Down : Spin::Up;
  return pattern;
}

// Accepts "0"/"1" as well as the UTF-8 arrows U+2191 (up) and U+2193 (down).
inline std::vector<Spin> parse_pattern(std::string_view text) {
  static constexpr std::string_view kUp = "\xE2\x86\x91";
  static constexpr std::string_view kDown = "\xE2\x86\x93";
  std::vector<Spin> pattern;
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] == '0') {
      pattern.push_back(Spin::Up);
      ++i;
    } else if (text[i] == '1') {
      pattern.push_back(Spin::Down);
      ++i;
    } else if (text.substr(i, 3) == kUp) {
      pattern.push_back(Spin::Up);
      i += 3;
    } else if (text.substr(i, 3) == kDown) {
      pattern.push_back(Spin::Down);
      i += 3;
    } else {
      throw std::invalid_argument("parse_pattern: unexpected character in '" +
                                  std::string(text) + "'");
    }
  }
  return pattern;
}

inline std::string format_pattern(BasisIndex index, int n_particles, bool arrows = false) {
  std::string out;
  for (int k = 1; k <= n_particles; ++k) {
    const bool down = is_down(index, k, n_particles);
    if (arrows)
      out += down ? "\xE2\x86\x93" : "\xE2\x86\x91";
    else
      out += down ? '1' : '0';
  }
  return out;
}

template <typename Real>
using Matrix2c = Eigen::Matrix<std::complex<Real>, 2, 2>;

template <typename Real = double>
Matrix2c<Real> pauli(Axis axis) {
  using C = std::complex<Real>;
  Matrix2c<Real> m;
  switch (axis) {
    case Axis::X: m << C(0), C(1), C(1), C(0); break;
    case Axis::Y: m << C(0), C(0, -1), C(0, 1), C(0); break;
    case Axis::Z: m << C(1), C(0), C(0), C(-1); break;
  }
  return m;
}

// Columns are the +1 and -1 eigenvectors of the Pauli matrix for `axis`.
// For X these are the left/right arrow states (|u> +- |d>)/sqrt2; for Y the
// y-up state (|u> + i|d>)/sqrt2 and the y-down state (|u> - i|d>)/sqrt2.
template <typename Real = double>
Matrix2c<Real> eigenbasis(Axis axis) {
  using C = std::complex<Real>;
  const Real h = Real(1) / std::sqrt(Real(2));
  Matrix2c<Real> m;
  switch (axis) {
    case Axis::X: m << C(h), C(h), C(h), C(-h); break;
    case Axis::Y: m << C(h), C(h), C(0, h), C(0, -h); break;
    case Axis::Z: m << C(1), C(0), C(0), C(1); break;
  }
  return m;
}

// (1 + sign * sigma_axis) / 2.
template <typename Real = double>
Matrix2c<Real> projector(Axis axis, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("projector: sign must be +1 or -1");
  return (Matrix2c<Real>::Identity() + Real(sign) * pauli<Real>(axis)) / Real(2);
}

template <typename Real>
bool is_unitary(const Matrix2c<Real>& u, Real tol = Real(kNormTolerance)) {
  return (u.adjoint() * u - Matrix2c<Real>::Identity()).cwiseAbs().maxCoeff() <= tol;
}

template <typename Real = double>
class BasicStateVector {
 public:
  using Scalar = std::complex<Real>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  // Normalizes the amplitudes; throws on a zero vector or a length other than 2^N.
  BasicStateVector(int n_particles, Vector amplitudes)
      : n_(n_particles), amps_(std::move(amplitudes)) {
    if (n_ < 1 || n_ > kMaxStateParticles)
      throw DimensionCapExceeded("state vector: N must lie in [1, " +
                                 std::to_string(kMaxStateParticles) + "]");
    if (static_cast<BasisIndex>(amps_.size()) != dimension_of(n_))
      throw std::invalid_argument("state vector: amplitude count is not 2^N");
    const Real norm = amps_.norm();
    if (!(norm > Real(0)) || !std::isfinite(norm))
      throw std::invalid_argument("state vector: amplitudes are all zero or not finite");
    if (std::abs(norm - Real(1)) > std::numeric_limits<Real>::epsilon()) amps_ /= norm;
  }

  int n_particles() const noexcept { return n_; }
  Eigen::Index dim() const noexcept { return amps_.size(); }
  const Vector& amplitudes() const noexcept { return amps_; }
  Scalar operator[](BasisIndex i) const { return amps_(static_cast<Eigen::Index>(i)); }

 private:
  int n_;
  Vector amps_;
};

using StateVector = BasicStateVector<double>;

template <typename Real = double>
class BasicDensityMatrix {
 public:
  using Scalar = std::complex<Real>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  // `labels` are the original particle numbers of the rows' tensor factors,
  // most significant first. Checks hermiticity and unit trace.
  BasicDensityMatrix(std::vector<int> labels, Matrix entries)
      : labels_(std::move(labels)), rho_(std::move(entries)) {
    const int m = static_cast<int>(labels_.size());
    if (m < 1 || m > kMaxDensityParticles)
      throw DimensionCapExceeded("density matrix: particle count must lie in [1, " +
                                 std::to_string(kMaxDensityParticles) + "]");
    if (std::set<int>(labels_.begin(), labels_.end()).size() != labels_.size() ||
        *std::min_element(labels_.begin(), labels_.end()) < 1)
      throw std::invalid_argument("density matrix: labels must be distinct and positive");
    const auto d = static_cast<Eigen::Index>(dimension_of(m));
    if (rho_.rows() != d || rho_.cols() != d)
      throw std::invalid_argument("density matrix: shape is not 2^M x 2^M");
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > Real(kNormTolerance))
      throw std::invalid_argument("density matrix: not hermitian");
    if (std::abs(rho_.trace() - Scalar(1)) > Real(kNormTolerance))
      throw std::invalid_argument("density matrix: trace differs from 1");
  }

  int n_particles() const noexcept { return static_cast<int>(labels_.size()); }
  Eigen::Index dim() const noexcept { return rho_.rows(); }
  const std::vector<int>& labels() const noexcept { return labels_; }
  const Matrix& entries() const noexcept { return rho_; }
  Scalar operator()(Eigen::Index i, Eigen::Index j) const { return rho_(i, j); }

  // Tensor position (1 = most significant) of an original particle label.
  int position_of(int label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
      throw std::out_of_range("density matrix: particle " + std::to_string(label) +
                              " is not part of this system");
    return static_cast<int>(it - labels_.begin()) + 1;
  }

 private:
  std::vector<int> labels_;
  Matrix rho_;
};

using DensityMatrix = BasicDensityMatrix<double>;

template <typename Real = double>
struct BasicTerm {
  std::vector<Spin> pattern;
  std::complex<Real> amplitude;
};

using Term = BasicTerm<double>;

template <typename Real = double>
BasicStateVector<Real> make_state(int n_particles, std::span<const BasicTerm<Real>> terms) {
  if (n_particles < 1 || n_particles > kMaxStateParticles)
    throw DimensionCapExceeded("make_state: N out of range");
  typename BasicStateVector<Real>::Vector amps =
      BasicStateVector<Real>::Vector::Zero(static_cast<Eigen::Index>(dimension_of(n_particles)));
  std::vector<bool> seen(amps.size(), false);
  for (const auto& term : terms) {
    if (static_cast<int>(term.pattern.size()) != n_particles)
      throw std::invalid_argument("make_state: pattern length differs from N");
    const auto i = static_cast<Eigen::Index>(basis_index(term.pattern));
    if (seen[i]) throw std::invalid_argument("make_state: duplicate pattern");
    seen[i] = true;
    amps(i) = term.amplitude;
  }
  return BasicStateVector<Real>(n_particles, std::move(amps));
}

template <typename Real = double>
BasicStateVector<Real> make_state(int n_particles,
                                  std::initializer_list<BasicTerm<Real>> terms) {
  return make_state<Real>(n_particles,
                          std::span<const BasicTerm<Real>>(terms.begin(), terms.size()));
}

// <a|b>, conjugate-linear in a.
template <typename Real>
std::complex<Real> inner_product(const BasicStateVector<Real>& a, const BasicStateVector<Real>& b) {
  if (a.n_particles() != b.n_particles())
    throw std::invalid_argument("inner_product: particle counts differ");
  return a.amplitudes().dot(b.amplitudes());
}

// |<a|b>|; equals 1 iff the states agree up to a global phase.
template <typename Real>
Real overlap(const BasicStateVector<Real>& a, const BasicStateVector<Real>& b) {
  return std::abs(inner_product(a, b));
}

template <typename Real>
BasicDensityMatrix<Real> state_to_density(const BasicStateVector<Real>& s) {
  if (s.n_particles() > kMaxDensityParticles)
    throw DimensionCapExceeded("state_to_density: N exceeds the density-matrix cap");
  std::vector<int> labels(static_cast<std::size_t>(s.n_particles()));
  for (int k = 0; k < s.n_particles(); ++k) labels[k] = k + 1;
  return BasicDensityMatrix<Real>(std::move(labels), s.amplitudes() * s.amplitudes().adjoint());
}

namespace detail {

// In-place action of a 2x2 matrix on one tensor factor.
template <typename Real, typename Derived>
void apply_single(Eigen::MatrixBase<Derived>& amps, int particle, int n_particles,
                  const Matrix2c<Real>& u) {
  const BasisIndex stride = particle_mask(particle, n_particles);
  const BasisIndex dim = dimension_of(n_particles);
  for (BasisIndex base = 0; base < dim; base += 2 * stride) {
    for (BasisIndex offset = 0; offset < stride; ++offset) {
      const auto i0 = static_cast<Eigen::Index>(base + offset);
      const auto i1 = static_cast<Eigen::Index>(base + offset + stride);
      const std::complex<Real> a0 = amps(i0);
      const std::complex<Real> a1 = amps(i1);
      amps(i0) = u(0, 0) * a0 + u(0, 1) * a1;
      amps(i1) = u(1, 0) * a0 + u(1, 1) * a1;
    }
  }
}

inline void check_particle(int particle, int n_particles, const char* where) {
  if (particle < 1 || particle > n_particles)
    throw std::out_of_range(std::string(where) + ": particle " + std::to_string(particle) +
                            " outside 1.." + std::to_string(n_particles));
}

}  // namespace detail

template <typename Real>
BasicStateVector<Real> apply_local_unitary(const BasicStateVector<Real>& s, int particle,
                                           const Matrix2c<Real>& u) {
  detail::check_particle(particle, s.n_particles(), "apply_local_unitary");
  if (!is_unitary(u)) throw std::invalid_argument("apply_local_unitary: matrix is not unitary");
  auto amps = s.amplitudes();
  detail::apply_single(amps, particle, s.n_particles(), u);
  return BasicStateVector<Real>(s.n_particles(), std::move(amps));
}

// Re-expresses the selected factors in the sigma_x eigenbasis: the new
// amplitude of the left arrow is (a_up + a_down)/sqrt2 and of the right arrow
// (a_up - a_down)/sqrt2. The map is its own inverse.
template <typename Real>
BasicStateVector<Real> basis_change_z_to_x(const BasicStateVector<Real>& s,
                                           std::span<const int> particles) {
  std::set<int> unique;
  for (int p : particles) {
    detail::check_particle(p, s.n_particles(), "basis_change_z_to_x");
    if (!unique.insert(p).second)
      throw std::invalid_argument("basis_change_z_to_x: repeated particle");
  }
  auto amps = s.amplitudes();
  const Matrix2c<Real> h = eigenbasis<Real>(Axis::X).adjoint();
  for (int p : unique) detail::apply_single(amps, p, s.n_particles(), h);
  return BasicStateVector<Real>(s.n_particles(), std::move(amps));
}

template <typename Real>
BasicStateVector<Real> basis_change_z_to_x(const BasicStateVector<Real>& s) {
  std::vector<int> all(static_cast<std::size_t>(s.n_particles()));
  for (int k = 0; k < s.n_particles(); ++k) all[k] = k + 1;
  return basis_change_z_to_x(s, std::span<const int>(all));
}

}  // namespace fragile
