#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cyclebetti {

/// Subset of {1, ..., 63} stored as a bitmask (vertex v lives in bit v-1).
class VertexSet {
 public:
  static constexpr int kMaxVertex = 63;

  VertexSet() = default;
  VertexSet(std::initializer_list<int> vertices);
  explicit VertexSet(std::span<const int> vertices);

  static VertexSet from_mask(std::uint64_t mask);
  /// The full vertex set {1..n}.
  static VertexSet full(int n);

  bool contains(int v) const noexcept;
  void insert(int v);
  void erase(int v) noexcept;

  std::size_t size() const noexcept;
  bool empty() const noexcept { return mask_ == 0; }
  int min() const;
  int max() const;
  std::uint64_t mask() const noexcept { return mask_; }

  /// Ascending element list.
  std::vector<int> elements() const;
  /// Complement inside {1..n}.
  VertexSet complement(int n) const;
  bool within(int n) const noexcept;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  /// Lexicographic order on the ascending element lists.
  friend std::strong_ordering operator<=>(const VertexSet& lhs, const VertexSet& rhs);

 private:
  std::uint64_t mask_ = 0;
};

/// "{2,4,6}"
std::string format_vertex_set(const VertexSet& set);
/// Accepts "2,4,6" or "{2,4,6}"; whitespace is ignored. Throws Error(Parse).
VertexSet parse_vertex_set(std::string_view text);

/// All k-subsets of {1..n} in lexicographic order.
std::vector<VertexSet> subsets_of_size(int n, int k);

}  // namespace cyclebetti
