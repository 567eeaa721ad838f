#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cyclebetti/cycle.hpp"
#include "cyclebetti/tableaux.hpp"

namespace cyclebetti {

/// Tableau of shape (j, 2, 1^{n-j-2}) to marked subset (W_T, a_T).
///
/// a_T is the entry at (2, 2). When a_T - 1 sits in the first row, W_T is the
/// first row; when it sits in the first column, W_T is a_T together with the
/// first row minus its leading 1. Throws Error(Shape) for any other shape.
MarkedSubset phi(const Tableau& tableau);

/// Inverse of phi, built directly from the two fill recipes:
///   1 in W: first row = sorted W, (2,2) = a, rest of column one = sorted
///           complement minus a;
///   1 not in W: first column = sorted complement, (2,2) = a, rest of row
///           one = sorted W minus a.
/// Throws Error(InvalidMarkedSubset) unless |W| = j and a is in m'(W).
Tableau psi(int n, int j, const VertexSet& w, int a);
Tableau psi(const MarkedSubset& marked);

/// Outcome of an exhaustive check of phi and psi for one (n, j).
struct VerificationReport {
  int n = 0;
  int j = 0;
  std::size_t tableau_count = 0;
  std::size_t marked_subset_count = 0;
  bool injective = true;
  bool image_matches = true;
  bool psi_after_phi_identity = true;
  bool phi_after_psi_identity = true;
  std::vector<std::string> counterexamples;

  bool passed() const noexcept {
    return injective && image_matches && psi_after_phi_identity && phi_after_psi_identity &&
           counterexamples.empty();
  }
};

VerificationReport verify_bijection(int n, int j);

/// phi(T*) has complementary W and the same marked vertex as phi(T).
bool duality_check(const Tableau& tableau);

}  // namespace cyclebetti
