#include "cyclebetti/cycle.hpp"

#include <algorithm>

#include "cyclebetti/error.hpp"

namespace cyclebetti {

namespace {

void require_cycle(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidCycle, "cycle needs n >= 3, got " + std::to_string(n));
  if (n > VertexSet::kMaxVertex) {
    throw Error(ErrorKind::InvalidCycle, "cycle size " + std::to_string(n) + " exceeds " +
                                             std::to_string(VertexSet::kMaxVertex));
  }
}

int next_vertex(int v, int n) { return v == n ? 1 : v + 1; }

void require_proper_nonempty(int n, const VertexSet& w) {
  if (!w.within(n)) throw Error(ErrorKind::OutOfRange, format_vertex_set(w) + " is not inside {1.." + std::to_string(n) + "}");
  if (w.empty() || w.size() == static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::UndefinedMarker, "markers need a proper nonempty subset, got " + format_vertex_set(w));
  }
}

}  // namespace

std::vector<int> CycleRestriction::component_minima() const {
  std::vector<int> out;
  out.reserve(components.size());
  for (const auto& arc : components) out.push_back(*std::min_element(arc.begin(), arc.end()));
  return out;
}

std::vector<Edge> cycle_edges(int n) {
  require_cycle(n);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, n);
  std::sort(edges.begin(), edges.end());
  return edges;
}

CycleRestriction restrict(int n, const VertexSet& w) {
  require_cycle(n);
  if (!w.within(n)) throw Error(ErrorKind::OutOfRange, format_vertex_set(w) + " is not inside {1.." + std::to_string(n) + "}");

  CycleRestriction out{n, w, {}};
  if (w.empty()) return out;
  if (w.size() == static_cast<std::size_t>(n)) {
    out.components.push_back(w.elements());
    return out;
  }

  // Start right after a missing vertex so no arc is split by the walk.
  int start = 1;
  while (w.contains(start)) ++start;
  std::vector<int> arc;
  for (int step = 0, v = next_vertex(start, n); step < n; ++step, v = next_vertex(v, n)) {
    if (w.contains(v)) {
      arc.push_back(v);
    } else if (!arc.empty()) {
      out.components.push_back(std::move(arc));
      arc.clear();
    }
  }
  if (!arc.empty()) out.components.push_back(std::move(arc));

  std::sort(out.components.begin(), out.components.end(), [](const auto& lhs, const auto& rhs) {
    return *std::min_element(lhs.begin(), lhs.end()) < *std::min_element(rhs.begin(), rhs.end());
  });
  return out;
}

VertexSet m_set(int n, const VertexSet& w) {
  require_cycle(n);
  require_proper_nonempty(n, w);
  const VertexSet side = w.contains(1) ? w.complement(n) : w;
  const auto minima = restrict(n, side).component_minima();
  return VertexSet(std::span<const int>(minima));
}

VertexSet m_prime(int n, const VertexSet& w) {
  VertexSet markers = m_set(n, w);
  markers.erase(markers.min());
  return markers;
}

std::string format_marked_subset(const MarkedSubset& marked) {
  return format_vertex_set(marked.w) + "|" + std::to_string(marked.a);
}

MarkedSubset parse_marked_subset(int n, std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw Error(ErrorKind::Parse, "marked subset needs 'W|a', got '" + std::string(text) + "'");
  const VertexSet a_set = parse_vertex_set(text.substr(bar + 1));
  if (a_set.size() != 1) throw Error(ErrorKind::Parse, "marked vertex must be a single integer in '" + std::string(text) + "'");
  return MarkedSubset{n, parse_vertex_set(text.substr(0, bar)), a_set.min()};
}

std::vector<MarkedSubset> marked_subsets(int n, int j, std::string* warning) {
  require_cycle(n);
  if (n < 4) throw Error(ErrorKind::Domain, "marked subsets need n >= 4, got " + std::to_string(n));
  std::vector<MarkedSubset> out;
  if (j < 2 || j > n - 2) {
    if (warning != nullptr) {
      *warning = "j = " + std::to_string(j) + " outside [2, " + std::to_string(n - 2) + "]; no marked subsets";
    }
    return out;
  }
  for (const VertexSet& w : subsets_of_size(n, j)) {
    for (int a : m_prime(n, w).elements()) out.push_back(MarkedSubset{n, w, a});
  }
  return out;
}

}  // namespace cyclebetti
