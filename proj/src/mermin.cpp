#include "fragile/mermin.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "fragile/constructions.hpp"
#include "fragile/errors.hpp"

namespace fragile {
namespace {

void check_n(int n, int max, const char* where) {
  if (n < 3 || n > max)
    throw std::out_of_range(std::string(where) + ": N must lie in [3, " + std::to_string(max) +
                            "]");
}

struct Search {
  const std::vector<MerminRelation>& relations;
  const std::unordered_map<std::uint64_t, std::size_t>& by_exponent;
  std::vector<std::size_t> prefix;
  std::vector<ContradictionSet> found;

  // Extends `prefix` to `remaining` more indices, the last of which is forced.
  void run(std::size_t start, int remaining, std::uint64_t acc, int sign) {
    if (remaining == 1) {
      const auto it = by_exponent.find(acc);
      if (it == by_exponent.end() || it->second < start) return;
      if (sign * relations[it->second].sign != -1) return;
      ContradictionSet set{prefix};
      set.relation_indices.push_back(it->second);
      found.push_back(std::move(set));
      return;
    }
    for (std::size_t i = start; i < relations.size(); ++i) {
      prefix.push_back(i);
      run(i + 1, remaining - 1, acc ^ relations[i].exponent, sign * relations[i].sign);
      prefix.pop_back();
    }
  }
};

}  // namespace

std::vector<MerminRelation> mermin_observables(int n) {
  check_n(n, kMaxMerminParticles, "mermin_observables");
  std::vector<MerminRelation> relations;
  // Bit k-1 of `ys` (counted from particle 1 as the most significant) selects sigma_y.
  for (std::uint64_t ys = 0; ys < dimension_of(n); ++ys) {
    const int y_count = std::popcount(ys);
    if (y_count % 2 != 0) continue;
    MerminRelation r;
    r.axes.assign(static_cast<std::size_t>(n), 'x');
    for (int k = 1; k <= n; ++k) {
      if (is_down(ys, k, n)) {
        r.axes[k - 1] = 'y';
        r.exponent |= std::uint64_t{1} << (n + k - 1);
      } else {
        r.exponent |= std::uint64_t{1} << (k - 1);
      }
    }
    r.sign = (y_count / 2) % 2 == 0 ? -1 : 1;
    relations.push_back(std::move(r));
  }
  return relations;
}

double observable_eigenvalue(const StateVector& s, std::string_view axes, double tol) {
  const int n = s.n_particles();
  if (static_cast<int>(axes.size()) != n)
    throw std::invalid_argument("observable_eigenvalue: axis string must have N characters");
  StateVector::Vector image = s.amplitudes();
  for (int k = 1; k <= n; ++k)
    detail::apply_single(image, k, n, pauli<double>(axis_from_char(axes[k - 1])));
  const double lambda = s.amplitudes().dot(image).real();
  const double residual = (image - lambda * s.amplitudes()).cwiseAbs().maxCoeff();
  if (residual > tol)
    throw NotAnEigenstate("observable_eigenvalue: state is not an eigenstate of " +
                              std::string(axes),
                          residual);
  return lambda;
}

std::vector<ContradictionSet> find_contradictions(const std::vector<MerminRelation>& relations,
                                                  int max_size) {
  if (max_size < 1 || static_cast<std::size_t>(max_size) > relations.size())
    throw std::invalid_argument("find_contradictions: max_size must lie in [1, relation count]");
  std::unordered_map<std::uint64_t, std::size_t> by_exponent;
  for (std::size_t i = 0; i < relations.size(); ++i)
    if (!by_exponent.emplace(relations[i].exponent, i).second)
      throw std::invalid_argument("find_contradictions: repeated relation");

  Search search{relations, by_exponent, {}, {}};
  for (int size = 1; size <= max_size; ++size) search.run(0, size, 0, 1);
  return std::move(search.found);
}

std::vector<ContradictionSet> find_contradictions(int n, int max_size) {
  return find_contradictions(mermin_observables(n), max_size);
}

RelationTableCheck verify_relation_table(int n, int relative_sign) {
  check_n(n, 12, "verify_relation_table");
  const auto state = ghz(n, Axis::Z, relative_sign);
  RelationTableCheck check;
  for (const auto& r : mermin_observables(n)) {
    const double measured = observable_eigenvalue(state, r.axes);
    if (std::abs(measured - r.sign) > kEigenvalueTolerance) {
      check.all_match = false;
      check.mismatches.push_back({r.axes, r.sign, measured});
    }
  }
  return check;
}

}  // namespace fragile
