#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cyclebetti/vertex_set.hpp"

namespace cyclebetti {

/// Induced subgraph C_n[W] split into its connected arcs.
///
/// Each arc lists its vertices in walking order around the cycle, so an arc
/// that wraps past n reads e.g. [5, 1] for n = 5. Arcs are ordered by their
/// minimum vertex.
struct CycleRestriction {
  int n = 0;
  VertexSet vertices;
  std::vector<std::vector<int>> components;

  std::size_t component_count() const noexcept { return components.size(); }
  std::vector<int> component_minima() const;
};

using Edge = std::pair<int, int>;

/// Edges of C_n as ordered pairs (smaller, larger), sorted. Throws
/// Error(InvalidCycle) for n < 3.
std::vector<Edge> cycle_edges(int n);

CycleRestriction restrict(int n, const VertexSet& w);

/// Component minima of C_n[W] when 1 is not in W, otherwise of the
/// complement's restriction. Defined for proper nonempty W only.
VertexSet m_set(int n, const VertexSet& w);

/// m_set with its minimum removed.
VertexSet m_prime(int n, const VertexSet& w);

struct MarkedSubset {
  int n = 0;
  VertexSet w;
  int a = 0;

  friend bool operator==(const MarkedSubset&, const MarkedSubset&) = default;
  friend auto operator<=>(const MarkedSubset&, const MarkedSubset&) = default;
};

/// "{2,4,6}|6"
std::string format_marked_subset(const MarkedSubset& marked);
/// Inverse of format_marked_subset; needs n since the text does not carry it.
MarkedSubset parse_marked_subset(int n, std::string_view text);

/// All (W, a) with |W| = j and a in m_prime(n, W), ordered by W
/// lexicographically and then by a. Requires n >= 4. A j outside [2, n-2]
/// gives an empty list; if `warning` is non-null it receives the reason.
std::vector<MarkedSubset> marked_subsets(int n, int j, std::string* warning = nullptr);

}  // namespace cyclebetti
