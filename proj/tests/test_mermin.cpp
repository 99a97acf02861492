#include <doctest.h>

#include <algorithm>
#include <set>

#include "fragile/constructions.hpp"
#include "fragile/errors.hpp"
#include "fragile/mermin.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace fragile;

namespace {

std::vector<std::pair<std::string, int>> table(int n) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& r : mermin_observables(n)) out.emplace_back(r.axes, r.sign);
  return out;
}

// Sign rule evaluated straight from the eigen-equation with full matrices.
double oracle_eigenvalue(const StateVector& s, const std::string& axes) {
  const Eigen::VectorXcd image = oracle::pauli_string(axes) * s.amplitudes();
  return s.amplitudes().dot(image).real();
}

}  // namespace

TEST_CASE("relation tables for N = 3, 4, 5") {
  using P = std::pair<std::string, int>;
  CHECK(table(3) == std::vector<P>{{"xxx", -1}, {"xyy", 1}, {"yxy", 1}, {"yyx", 1}});
  CHECK(table(4) == std::vector<P>{{"xxxx", -1}, {"xxyy", 1}, {"xyxy", 1}, {"xyyx", 1},
                                   {"yxxy", 1}, {"yxyx", 1}, {"yyxx", 1}, {"yyyy", -1}});
  const auto t5 = table(5);
  CHECK(t5.size() == 16);
  CHECK(std::count_if(t5.begin(), t5.end(), [](const P& p) { return p.second == -1; }) == 6);
  for (const auto& [axes, sign] : t5) {
    const auto ys = std::count(axes.begin(), axes.end(), 'y');
    CHECK(sign == (ys == 2 ? 1 : -1));
  }
}

TEST_CASE("relation exponents") {
  for (int n = 3; n <= 8; ++n)
    for (const auto& r : mermin_observables(n)) {
      for (int k = 1; k <= n; ++k) {
        const bool x = (r.exponent >> (k - 1)) & 1U;
        const bool y = (r.exponent >> (n + k - 1)) & 1U;
        REQUIRE(x != y);
        REQUIRE(y == (r.axes[std::size_t(k - 1)] == 'y'));
      }
      REQUIRE((r.exponent >> (2 * n)) == 0);
    }
}

TEST_CASE("observable eigenvalues on GHZ_z") {
  CHECK(observable_eigenvalue(ghz(3, Axis::Z), "xyy") == doctest::Approx(1.0));
  CHECK(observable_eigenvalue(ghz(3, Axis::Z), "xxx") == doctest::Approx(-1.0));
  CHECK(observable_eigenvalue(ghz(5, Axis::Z), "xxxyy") == doctest::Approx(1.0));
  CHECK_THROWS_AS(observable_eigenvalue(ghz(3, Axis::Z), "zzz"), NotAnEigenstate);
  CHECK_THROWS_AS(observable_eigenvalue(ghz(3, Axis::Z), "xyx"), NotAnEigenstate);
  CHECK_THROWS_AS(observable_eigenvalue(ghz(3, Axis::Z), "xy"), std::invalid_argument);
  CHECK(observable_eigenvalue(special_bernstein(3), "zzz") == doctest::Approx(-1.0));
}

TEST_CASE("parity law and simultaneous eigenstate through N = 10") {
  for (int n = 3; n <= 10; ++n) {
    const auto g = ghz(n, Axis::Z);
    for (const auto& r : mermin_observables(n)) {
      const double lambda = observable_eigenvalue(g, r.axes);
      const auto ys = std::count(r.axes.begin(), r.axes.end(), 'y');
      REQUIRE(lambda == doctest::Approx((ys / 2) % 2 == 0 ? -1.0 : 1.0).epsilon(1e-12));
      if (n <= 6) REQUIRE(oracle_eigenvalue(g, r.axes) == doctest::Approx(lambda).epsilon(1e-12));
    }
  }
}

TEST_CASE("verify_relation_table") {
  for (int n = 3; n <= 12; ++n) CHECK(verify_relation_table(n).all_match);
  const auto flipped = verify_relation_table(4, +1);
  CHECK_FALSE(flipped.all_match);
  CHECK(flipped.mismatches.size() == 8);
  CHECK_THROWS_AS(verify_relation_table(13), std::out_of_range);
}

TEST_CASE("contradiction counts") {
  const auto c3 = find_contradictions(3, 4);
  REQUIRE(c3.size() == 1);
  CHECK(c3[0].relation_indices == std::vector<std::size_t>{0, 1, 2, 3});

  CHECK(find_contradictions(4, 4).size() == 8);
  CHECK(find_contradictions(5, 4).size() == 80);
  CHECK(find_contradictions(4, 8).size() == 8);
}

TEST_CASE("N = 5 quadruplets mix the all-x relation or a four-y relation with two-y relations") {
  const auto rel = mermin_observables(5);
  for (const auto& set : find_contradictions(5, 4)) {
    int minus = 0;
    for (auto i : set.relation_indices) minus += rel[i].sign == -1;
    CHECK(minus % 2 == 1);
    CHECK(minus < 4);
  }
}

TEST_CASE("contradiction sets are sound, distinct and ordered") {
  for (int n = 3; n <= 6; ++n) {
    const auto rel = mermin_observables(n);
    const auto sets = find_contradictions(rel, n == 3 ? 4 : n <= 5 ? 6 : 4);
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const auto& idx = sets[i].relation_indices;
      std::uint64_t acc = 0;
      int sign = 1;
      for (auto j : idx) {
        acc ^= rel[j].exponent;
        sign *= rel[j].sign;
      }
      REQUIRE(acc == 0);
      REQUIRE(sign == -1);
      REQUIRE(std::adjacent_find(idx.begin(), idx.end(), std::greater_equal<>()) == idx.end());
      REQUIRE(seen.insert(idx).second);
      if (i > 0) {
        const auto& prev = sets[i - 1].relation_indices;
        REQUIRE((prev.size() < idx.size() || (prev.size() == idx.size() && prev < idx)));
      }
    }
  }
}

TEST_CASE("contradictions match a brute-force subset scan") {
  const auto rel = mermin_observables(4);
  std::size_t expected = 0;
  for (std::uint32_t mask = 1; mask < (1U << rel.size()); ++mask) {
    std::uint64_t acc = 0;
    int sign = 1;
    for (std::size_t j = 0; j < rel.size(); ++j)
      if ((mask >> j) & 1U) {
        acc ^= rel[j].exponent;
        sign *= rel[j].sign;
      }
    expected += acc == 0 && sign == -1;
  }
  CHECK(find_contradictions(rel, int(rel.size())).size() == expected);
}

TEST_CASE("larger contradiction counts") {
  CHECK(find_contradictions(5, 6).size() == 80 + 192);
  CHECK(find_contradictions(6, 4).size() == 640);
}

TEST_CASE("contradiction argument validation") {
  CHECK_THROWS_AS(find_contradictions(3, 5), std::invalid_argument);
  CHECK_THROWS_AS(find_contradictions(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(mermin_observables(2), std::out_of_range);
}
