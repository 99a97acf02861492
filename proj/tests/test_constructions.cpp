#include <doctest.h>

#include <cmath>

#include "fragile/constructions.hpp"
#include "fragile/measurement.hpp"
#include "support.hpp"

using namespace fragile;
using testing_support::max_abs;
using testing_support::random_assignment;
using testing_support::random_phases;

TEST_CASE("special Bernstein support and moduli") {
  for (int n = 3; n <= 12; ++n) {
    const auto s = special_bernstein(n);
    const double modulus = std::pow(2.0, -(n - 1) / 2.0);
    int nonzero = 0;
    for (BasisIndex i = 0; i < dimension_of(n); ++i) {
      if (down_count(i) % 2 == 1) {
        REQUIRE(std::abs(s[i] - modulus) < 1e-15);
        ++nonzero;
      } else {
        REQUIRE(s[i] == std::complex<double>(0.0));
      }
    }
    CHECK(nonzero == int(dimension_of(n) / 2));
  }
  CHECK(std::abs(special_bernstein(3)[1] - 0.5) < 1e-15);
  CHECK(std::abs(special_bernstein(4)[1] - 1.0 / (2.0 * std::sqrt(2.0))) < 1e-15);
  CHECK(std::abs(special_bernstein(5)[31] - 0.25) < 1e-15);
  CHECK_THROWS_AS(special_bernstein(2), std::out_of_range);
  CHECK_THROWS_AS(special_bernstein(17), std::out_of_range);
}

TEST_CASE("term phase vectors") {
  CHECK(odd_parity_labels(3) == std::vector<BasisIndex>{1, 2, 4, 7});
  const TermPhaseVector t(3, {-M_PI / 2, 2 * M_PI, 7 * M_PI, 0.0});
  CHECK(std::abs(t[0] - 1.5 * M_PI) < 1e-15);
  CHECK(t[1] == 0.0);
  CHECK(std::abs(t[2] - M_PI) < 1e-12);
  CHECK_THROWS_AS(TermPhaseVector(3, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("general Bernstein") {
  for (int n = 3; n <= 6; ++n) {
    const auto zero = general_bernstein(n, TermPhaseVector::zeros(n));
    CHECK(max_abs(zero.amplitudes() - special_bernstein(n).amplitudes()) == 0.0);
    const TermPhaseVector pi(n, std::vector<double>(dimension_of(n) / 2, M_PI));
    const auto flipped = general_bernstein(n, pi);
    CHECK(max_abs(flipped.amplitudes() + special_bernstein(n).amplitudes()) < 1e-15);
    CHECK(std::abs(overlap(flipped, special_bernstein(n)) - 1.0) < 1e-12);
  }
  CHECK(bernstein_certificate(general_bernstein(4, random_phases(4))).is_bernstein);
  CHECK_THROWS_AS(general_bernstein(4, TermPhaseVector::zeros(3)), std::invalid_argument);
}

TEST_CASE("general Bernstein states all pass the certificate") {
  for (int n = 3; n <= 6; ++n)
    for (int rep = 0; rep < 50; ++rep) REQUIRE(bernstein_certificate(general_bernstein(n, random_phases(n))).is_bernstein);
}

TEST_CASE("ghz") {
  const auto z = ghz(3, Axis::Z, -1);
  CHECK(std::abs(z[0] - M_SQRT1_2) < 1e-15);
  CHECK(std::abs(z[7] + M_SQRT1_2) < 1e-15);
  CHECK(z.amplitudes().segment(1, 6).norm() == 0.0);

  CHECK(std::abs(overlap(basis_change_z_to_x(ghz(3, Axis::X, -1)), z) - 1.0) < 1e-12);
  CHECK(std::abs(overlap(ghz(3, Axis::X, -1), special_bernstein(3)) - 1.0) < 1e-12);

  const auto bell = ghz(2, Axis::Z, 1);
  CHECK(std::abs(bell[0] - M_SQRT1_2) < 1e-15);
  CHECK(std::abs(bell[3] - M_SQRT1_2) < 1e-15);

  CHECK_THROWS_AS(ghz(3, Axis::Y), std::invalid_argument);
  CHECK_THROWS_AS(ghz(3, Axis::Z, 2), std::invalid_argument);
  CHECK_THROWS_AS(ghz(1, Axis::Z), std::out_of_range);
}

TEST_CASE("GHZ equivalence through N = 12") {
  for (int n = 3; n <= 12; ++n)
    REQUIRE(std::abs(std::abs(inner_product(basis_change_z_to_x(special_bernstein(n)), ghz(n, Axis::Z))) - 1.0) < 1e-12);
}

TEST_CASE("inhomogeneous Bernstein family") {
  const auto half = inhomogeneous_bernstein3(0.5);
  CHECK(max_abs(half.amplitudes() - special_bernstein(3).amplitudes()) < 1e-15);
  for (double q : {0.05, 0.1, 0.25, 0.3, 0.4, 0.5}) {
    const auto s = inhomogeneous_bernstein3(q);
    CHECK(std::abs(s.amplitudes().norm() - 1.0) < 1e-12);
    CHECK(s[0] == std::complex<double>(0.0));
    CHECK(std::abs(s[1] - q) < 1e-15);
    CHECK(std::abs(s[3] - std::sqrt(q * (1 - 2 * q))) < 1e-15);
    CHECK(std::abs(s[7] - std::sqrt(1 - 3 * q * (1 - q))) < 1e-15);
  }
  const auto quarter = inhomogeneous_bernstein3(0.25);
  for (int k = 1; k <= 3; ++k)
    CHECK(std::abs(joint_probability(quarter, OutcomeQuery({{k, Axis::Z, 1}})) - 0.25) < 1e-12);
  CHECK_THROWS_AS(inhomogeneous_bernstein3(0.0), std::out_of_range);
  CHECK_THROWS_AS(inhomogeneous_bernstein3(0.51), std::out_of_range);
}

TEST_CASE("local phase transforms") {
  const auto b = special_bernstein(3);
  PhaseAssignment identity{{0, 0, 0}, {0, 0, 0}};
  CHECK(max_abs(local_phase_transform(b, identity).amplitudes() - b.amplitudes()) == 0.0);

  const double c = 0.37;
  PhaseAssignment uniform{{c, c, c}, {c, c, c}};
  CHECK(max_abs(local_phase_transform(b, uniform).amplitudes() - std::polar(1.0, 3 * c) * b.amplitudes()) < 1e-15);

  for (int rep = 0; rep < 10; ++rep) {
    const double b1 = testing_support::uniform(-3, 3), b2 = testing_support::uniform(-3, 3),
                 b3 = testing_support::uniform(-3, 3);
    PhaseAssignment period{{b1 + M_PI, b2 + M_PI, b3 - M_PI}, {b1, b2, b3}};
    CHECK(std::abs(overlap(local_phase_transform(b, period), b) - 1.0) < 1e-12);
  }

  const auto s = testing_support::random_state(4);
  const auto p = random_assignment(4);
  CHECK(std::abs(local_phase_transform(s, p).amplitudes().norm() - 1.0) < 1e-12);
  CHECK_THROWS_AS(local_phase_transform(s, random_assignment(3)), std::invalid_argument);
}

TEST_CASE("push_forward matches the transformed state") {
  for (int n = 3; n <= 7; ++n) {
    const auto p = random_assignment(n);
    const auto direct = local_phase_transform(special_bernstein(n), p);
    const auto via_phases = general_bernstein(n, push_forward(p));
    CHECK(max_abs(direct.amplitudes() - via_phases.amplitudes()) < 1e-12);
  }
}

TEST_CASE("deltas are alpha minus beta") {
  PhaseAssignment p{{1.0, 2.0}, {0.25, -1.0}};
  CHECK(p.deltas() == std::vector<double>{0.75, 3.0});
}
