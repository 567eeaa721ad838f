#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace cyclebetti {

/// Largest cycle the subset sweeps accept; betti_table does 2^n homology
/// computations.
inline constexpr int kMaxHochsterN = 20;

struct BettiEntry {
  int i = 0;
  int j = 0;
  std::uint64_t value = 0;

  friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

/// Graded Betti numbers β_{i,j}(C_n) for every 0 <= i <= j <= n.
struct BettiTable {
  int n = 0;
  std::map<std::pair<int, int>, std::uint64_t> entries;

  std::uint64_t at(int i, int j) const;
  /// Nonzero entries ordered by (j, i).
  std::vector<BettiEntry> nonzero() const;
};

/// Sum over |W| = j of dim H̃_{j-i-1}(C_n[W]). Requires 3 <= n <= 20 and
/// 0 <= i <= j <= n.
std::uint64_t betti(int n, int i, int j);

/// Every cell computed from homology; nothing about vanishing is assumed.
/// Requires 4 <= n <= 20. Work is split across `threads` workers
/// (0 picks the hardware concurrency).
BettiTable betti_table(int n, unsigned threads = 0);

/// Sum over |W| = j of (components of C_n[W]) - 1, without homology.
/// Requires n >= 4 and 2 <= j <= n - 2.
std::uint64_t linear_strand(int n, int j);

}  // namespace cyclebetti
