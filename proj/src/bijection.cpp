#include "cyclebetti/bijection.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cyclebetti/error.hpp"

namespace cyclebetti {

namespace {

/// Returns j if the tableau has shape (j, 2, 1^{n-j-2}) for an admissible j.
int hook_parameter(const Tableau& tableau) {
  const int n = tableau.size();
  const auto& parts = tableau.shape().parts();
  const int j = parts.empty() ? 0 : parts.front();
  if (n < 4 || j < 2 || j > n - 2 || tableau.shape() != hook_shape(n, j)) {
    std::string shape;
    for (int p : parts) shape += (shape.empty() ? "" : ",") + std::to_string(p);
    throw Error(ErrorKind::Shape, "expected shape (j,2,1^{n-j-2}) with 2 <= j <= n-2, got (" + shape + ")");
  }
  return j;
}

}  // namespace

MarkedSubset phi(const Tableau& tableau) {
  const int j = hook_parameter(tableau);
  const int n = tableau.size();
  const int a = tableau.at(2, 2);
  const auto [row, col] = tableau.position_of(a - 1);

  VertexSet w;
  if (row == 1) {
    for (int c = 1; c <= j; ++c) w.insert(tableau.at(1, c));
  } else if (col == 1) {
    w.insert(a);
    for (int c = 2; c <= j; ++c) w.insert(tableau.at(1, c));
  } else {
    throw Error(ErrorKind::InvariantViolation, "entry " + std::to_string(a - 1) + " before T(2,2) lies outside the first row and column");
  }
  return MarkedSubset{n, w, a};
}

Tableau psi(int n, int j, const VertexSet& w, int a) {
  if (n < 4 || j < 2 || j > n - 2) {
    throw Error(ErrorKind::InvalidMarkedSubset, "need n >= 4 and 2 <= j <= n-2, got n=" + std::to_string(n) + " j=" + std::to_string(j));
  }
  const std::string label = format_marked_subset({n, w, a});
  if (!w.within(n) || w.size() != static_cast<std::size_t>(j)) {
    throw Error(ErrorKind::InvalidMarkedSubset, label + " is not a " + std::to_string(j) + "-subset of {1.." + std::to_string(n) + "}");
  }
  if (!m_prime(n, w).contains(a)) throw Error(ErrorKind::InvalidMarkedSubset, std::to_string(a) + " is not in m'(W) for " + label);

  const VertexSet complement = w.complement(n);
  std::vector<int> first_row;
  std::vector<int> first_column;
  if (w.contains(1)) {
    first_row = w.elements();
    VertexSet rest = complement;
    rest.erase(a);
    first_column.push_back(1);
    for (int v : rest.elements()) first_column.push_back(v);
  } else {
    first_column = complement.elements();
    VertexSet rest = w;
    rest.erase(a);
    first_row.push_back(1);
    for (int v : rest.elements()) first_row.push_back(v);
  }

  // Standardness comes down to a exceeding both of its neighbours.
  const int above = first_row.at(1);
  const int left = first_column.at(1);
  if (a <= above || a <= left) {
    throw Error(ErrorKind::InvariantViolation, "psi" + label + ": T(2,2)=" + std::to_string(a) + " not above T(1,2)=" +
                                                   std::to_string(above) + " and T(2,1)=" + std::to_string(left));
  }

  std::vector<std::vector<int>> rows;
  rows.push_back(first_row);
  rows.push_back({first_column[1], a});
  for (std::size_t r = 2; r < first_column.size(); ++r) rows.push_back({first_column[r]});
  try {
    return Tableau::from_rows(std::move(rows));
  } catch (const Error& e) {
    throw Error(ErrorKind::InvariantViolation, "psi" + label + " built a non-standard filling: " + e.what());
  }
}

Tableau psi(const MarkedSubset& marked) {
  return psi(marked.n, static_cast<int>(marked.w.size()), marked.w, marked.a);
}

VerificationReport verify_bijection(int n, int j) {
  if (n < 4 || j < 2 || j > n - 2) {
    throw Error(ErrorKind::Domain, "verification needs n >= 4 and 2 <= j <= n-2, got n=" + std::to_string(n) + " j=" + std::to_string(j));
  }
  VerificationReport report;
  report.n = n;
  report.j = j;

  const std::vector<Tableau> tableaux = enumerate_syt(hook_shape(n, j));
  const std::vector<MarkedSubset> marked = marked_subsets(n, j);
  report.tableau_count = tableaux.size();
  report.marked_subset_count = marked.size();

  std::map<MarkedSubset, std::string> image;
  for (const Tableau& t : tableaux) {
    const std::string text = format_tableau(t);
    MarkedSubset m;
    try {
      m = phi(t);
    } catch (const Error& e) {
      report.counterexamples.push_back("phi(" + text + ") failed: " + e.what());
      continue;
    }
    const auto [it, fresh] = image.emplace(m, text);
    if (!fresh) {
      report.injective = false;
      report.counterexamples.push_back("phi(" + text + ") = phi(" + it->second + ") = " + format_marked_subset(m));
    }
    try {
      const Tableau back = psi(m);
      if (!(back == t)) {
        report.psi_after_phi_identity = false;
        report.counterexamples.push_back("psi(phi(" + text + ")) = " + format_tableau(back));
      }
    } catch (const Error& e) {
      report.psi_after_phi_identity = false;
      report.counterexamples.push_back("psi(phi(" + text + ")) failed: " + e.what());
    }
  }

  const std::set<MarkedSubset> target(marked.begin(), marked.end());
  std::set<MarkedSubset> reached;
  for (const auto& [m, text] : image) reached.insert(m);
  if (reached != target) {
    report.image_matches = false;
    for (const MarkedSubset& m : target) {
      if (!reached.contains(m)) report.counterexamples.push_back("not in image: " + format_marked_subset(m));
    }
    for (const MarkedSubset& m : reached) {
      if (!target.contains(m)) report.counterexamples.push_back("image outside target: " + format_marked_subset(m));
    }
  }

  for (const MarkedSubset& m : marked) {
    try {
      const MarkedSubset back = phi(psi(m));
      if (!(back == m)) {
        report.phi_after_psi_identity = false;
        report.counterexamples.push_back("phi(psi(" + format_marked_subset(m) + ")) = " + format_marked_subset(back));
      }
    } catch (const Error& e) {
      report.phi_after_psi_identity = false;
      report.counterexamples.push_back("phi(psi(" + format_marked_subset(m) + ")) failed: " + e.what());
    }
  }
  return report;
}

bool duality_check(const Tableau& tableau) {
  const MarkedSubset forward = phi(tableau);
  const MarkedSubset dual = phi(transpose(tableau));
  return dual.w == forward.w.complement(forward.n) && dual.a == forward.a;
}

}  // namespace cyclebetti
