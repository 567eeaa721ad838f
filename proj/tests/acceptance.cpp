// Acceptance suite: one line per criterion, nonzero exit if any fails.
// All comparisons are exact integer or structural equality.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cyclebetti/bijection.hpp"
#include "cyclebetti/cycle.hpp"
#include "cyclebetti/hochster.hpp"
#include "cyclebetti/homology.hpp"
#include "cyclebetti/tableaux.hpp"

namespace {

using namespace cyclebetti;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;  // 0 = no runtime bound
  std::function<Outcome()> check;
};

Outcome eq1_identity() {
  Outcome o;
  std::size_t cells = 0;
  for (int n = 4; n <= 12; ++n) {
    for (int j = 2; j <= n - 2; ++j) {
      const Shape shape = hook_shape(n, j);
      const std::uint64_t b = betti(n, j - 1, j);
      const std::uint64_t enumerated = enumerate_syt(shape).size();
      const std::uint64_t hook = count_syt_hook_length(shape);
      const std::uint64_t marked = marked_subsets(n, j).size();
      if (b != enumerated || b != hook || b != marked) {
        std::ostringstream s;
        s << "n=" << n << " j=" << j << ": betti=" << b << " syt=" << enumerated << " hook=" << hook
          << " marked=" << marked;
        o.fail(s.str());
      }
      ++cells;
    }
  }
  if (o.ok) o.detail = std::to_string(cells) + " (n,j) cells, n in [4,12]";
  return o;
}

Outcome example_one() {
  Outcome o;
  const std::set<MarkedSubset> expected{
      {5, {2, 4}, 4}, {5, {2, 5}, 5}, {5, {3, 5}, 5}, {5, {1, 3}, 4}, {5, {1, 4}, 5},
  };
  const auto tableaux = enumerate_syt(hook_shape(5, 2));
  if (tableaux.size() != 5) o.fail("expected 5 tableaux, got " + std::to_string(tableaux.size()));
  std::set<MarkedSubset> image;
  for (const Tableau& t : tableaux) image.insert(phi(t));
  if (image != expected) o.fail("phi image differs from the five listed pairs");

  const std::vector<std::pair<std::string, MarkedSubset>> golden{
      {"1,2;3,4;5", {5, {2, 4}, 4}}, {"1,3;2,4;5", {5, {1, 3}, 4}}, {"1,2;3,5;4", {5, {2, 5}, 5}},
      {"1,3;2,5;4", {5, {3, 5}, 5}}, {"1,4;2,5;3", {5, {1, 4}, 5}},
  };
  for (const auto& [text, marked] : golden) {
    if (!(phi(parse_tableau(text)) == marked)) o.fail("phi(" + text + ") != " + format_marked_subset(marked));
    if (format_tableau(psi(marked)) != text) o.fail("psi(" + format_marked_subset(marked) + ") != " + text);
  }
  if (o.ok) o.detail = "5 tableaux <-> 5 marked subsets";
  return o;
}

Outcome example_two() {
  Outcome o;
  if (m_prime(6, {2, 4, 6}) != VertexSet{4, 6}) o.fail("m'({2,4,6}) = " + format_vertex_set(m_prime(6, {2, 4, 6})));
  const std::string left = format_tableau(psi(6, 3, {2, 4, 6}, 4));
  const std::string right = format_tableau(psi(6, 3, {2, 4, 6}, 6));
  if (left != "1,2,6;3,4;5") o.fail("psi(6,3,{2,4,6},4) = " + left);
  if (right != "1,2,4;3,6;5") o.fail("psi(6,3,{2,4,6},6) = " + right);
  if (o.ok) o.detail = "m'={4,6}; " + left + " and " + right;
  return o;
}

Outcome vanishing() {
  Outcome o;
  for (int n = 4; n <= 10; ++n) {
    const BettiTable table = betti_table(n);
    if (table.at(0, 0) != 1) o.fail("n=" + std::to_string(n) + ": beta_{0,0} != 1");
    if (table.at(n - 2, n) != 1) o.fail("n=" + std::to_string(n) + ": beta_{n-2,n} != 1");
    for (const BettiEntry& e : table.nonzero()) {
      const bool boundary = (e.i == 0 && e.j == 0) || (e.i == n - 2 && e.j == n);
      const bool strand = e.i == e.j - 1 && e.j >= 2 && e.j <= n - 2;
      if (!boundary && !strand) {
        o.fail("n=" + std::to_string(n) + ": unexpected nonzero beta_{" + std::to_string(e.i) + "," + std::to_string(e.j) + "}");
      }
    }
    for (int j = 2; j <= n - 2; ++j) {
      if (table.at(j - 1, j) == 0) o.fail("n=" + std::to_string(n) + ": linear strand vanishes at j=" + std::to_string(j));
    }
  }
  if (o.ok) o.detail = "full tables for n in [4,10]";
  return o;
}

Outcome round_trips() {
  Outcome o;
  std::size_t tableaux = 0;
  std::size_t marked = 0;
  for (int n = 4; n <= 12; ++n) {
    for (int j = 2; j <= n - 2; ++j) {
      for (const Tableau& t : enumerate_syt(hook_shape(n, j))) {
        if (!(psi(phi(t)) == t)) o.fail("psi(phi(" + format_tableau(t) + ")) differs");
        ++tableaux;
      }
      for (const MarkedSubset& m : marked_subsets(n, j)) {
        if (!(phi(psi(m)) == m)) o.fail("phi(psi(" + format_marked_subset(m) + ")) differs");
        ++marked;
      }
    }
  }
  if (o.ok) o.detail = std::to_string(tableaux) + " tableaux, " + std::to_string(marked) + " marked subsets";
  return o;
}

Outcome duality() {
  Outcome o;
  for (int n = 4; n <= 12; ++n) {
    for (int j = 2; j <= n - 2; ++j) {
      if (betti(n, j - 1, j) != betti(n, n - j - 1, n - j)) {
        o.fail("beta asymmetry at n=" + std::to_string(n) + " j=" + std::to_string(j));
      }
    }
  }
  std::size_t checked = 0;
  for (int n = 4; n <= 10; ++n) {
    for (int j = 2; j <= n - 2; ++j) {
      for (const Tableau& t : enumerate_syt(hook_shape(n, j))) {
        const MarkedSubset forward = phi(t);
        const MarkedSubset dual = phi(transpose(t));
        if (dual.w != forward.w.complement(n) || dual.a != forward.a) o.fail("duality fails for " + format_tableau(t));
        ++checked;
      }
    }
  }
  if (o.ok) o.detail = "Betti symmetry n<=12; " + std::to_string(checked) + " transposes n<=10";
  return o;
}

Outcome homology_oracle() {
  Outcome o;
  std::size_t complexes = 0;
  for (int n = 3; n <= 10; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const VertexSet w = VertexSet::from_mask(mask);
      const SimplicialComplex k = cycle_complex(n, w);
      const GraphHomology expected = graph_homology_oracle(n, w);
      const GraphHomology got{reduced_betti_dim(k, -1), reduced_betti_dim(k, 0), reduced_betti_dim(k, 1)};
      if (!(got == expected)) o.fail("n=" + std::to_string(n) + " W=" + format_vertex_set(w));
      for (int d = -1; d <= k.max_dim() + 1; ++d) {
        if (!multiply(boundary_matrix(k, d), boundary_matrix(k, d + 1)).is_zero()) {
          o.fail("boundary squared nonzero: n=" + std::to_string(n) + " W=" + format_vertex_set(w) + " d=" + std::to_string(d));
        }
      }
      ++complexes;
    }
  }
  if (o.ok) o.detail = std::to_string(complexes) + " restrictions, n in [3,10]";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Betti number = SYT count = hook length = marked subsets", 60.0, eq1_identity},
      {2, "five-cycle golden: phi and psi on Y(2,5)", 0.0, example_one},
      {3, "six-cycle golden: m'({2,4,6}) and psi tableaux", 0.0, example_two},
      {4, "vanishing pattern of the Betti table", 0.0, vanishing},
      {5, "psi.phi = id and phi.psi = id", 30.0, round_trips},
      {6, "duality under transposition", 0.0, duality},
      {7, "rank homology agrees with graph oracle; boundary squared is zero", 0.0, homology_oracle},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      outcome.fail("took " + std::to_string(seconds) + " s, budget " + std::to_string(c.budget_seconds) + " s");
    }
    if (!outcome.ok) ++failures;
    std::cout << (outcome.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " [" << outcome.detail
              << "] (" << std::fixed;
    std::cout.precision(2);
    std::cout << seconds << " s)\n";
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
