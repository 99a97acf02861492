#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fragile/qstate.hpp"

namespace fragile {

// A product of sigma_x / sigma_y factors with an even number of sigma_y.
// Read as a constraint on preassigned outcomes m_kx, m_ky = +-1: the product
// of the selected outcomes must equal `sign`.
struct MerminRelation {
  std::string axes;
  // Bit k-1 marks m_kx, bit N+k-1 marks m_ky.
  std::uint64_t exponent = 0;
  int sign = 1;
};

constexpr int kMaxMerminParticles = 16;

// Lexicographic over axis strings (x < y).
std::vector<MerminRelation> mermin_observables(int n);

// Eigenvalue of the Pauli product `axes` (over x, y, z) on s.
// Throws NotAnEigenstate when |O s - lambda s| exceeds `tol` in any entry.
double observable_eigenvalue(const StateVector& s, std::string_view axes,
                             double tol = kResidualTolerance);

struct ContradictionSet {
  std::vector<std::size_t> relation_indices;  // increasing
  std::size_t size() const { return relation_indices.size(); }
};

// Subsets of at most max_size relations whose exponents cancel mod 2 while
// their signs multiply to -1. Sorted by size, then lexicographically.
std::vector<ContradictionSet> find_contradictions(const std::vector<MerminRelation>& relations,
                                                  int max_size);
std::vector<ContradictionSet> find_contradictions(int n, int max_size);

struct RelationMismatch {
  std::string axes;
  int predicted = 0;
  double measured = 0.0;
};

struct RelationTableCheck {
  bool all_match = true;
  std::vector<RelationMismatch> mismatches;
};

// Compares every predicted sign with the eigenvalue on ghz(N, Z, relative_sign).
RelationTableCheck verify_relation_table(int n, int relative_sign = -1);

}  // namespace fragile
