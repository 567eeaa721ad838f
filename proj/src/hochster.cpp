#include "cyclebetti/hochster.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <bit>
#include <thread>

#include "cyclebetti/cycle.hpp"
#include "cyclebetti/error.hpp"
#include "cyclebetti/homology.hpp"

namespace cyclebetti {

namespace {

void require_hochster_n(int n, int lowest) {
  if (n < lowest || n > kMaxHochsterN) {
    throw Error(ErrorKind::Domain, "cycle size must lie in [" + std::to_string(lowest) + ", " +
                                       std::to_string(kMaxHochsterN) + "], got " + std::to_string(n));
  }
}

}  // namespace

std::uint64_t BettiTable::at(int i, int j) const {
  const auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

std::vector<BettiEntry> BettiTable::nonzero() const {
  std::vector<BettiEntry> out;
  for (const auto& [key, value] : entries) {
    if (value != 0) out.push_back({key.first, key.second, value});
  }
  std::sort(out.begin(), out.end(), [](const BettiEntry& a, const BettiEntry& b) {
    return std::pair(a.j, a.i) < std::pair(b.j, b.i);
  });
  return out;
}

std::uint64_t betti(int n, int i, int j) {
  require_hochster_n(n, 3);
  if (i < 0 || i > j || j > n) {
    throw Error(ErrorKind::Domain, "need 0 <= i <= j <= n, got i=" + std::to_string(i) + " j=" + std::to_string(j));
  }
  std::uint64_t total = 0;
  for (const VertexSet& w : subsets_of_size(n, j)) total += reduced_betti_dim(cycle_complex(n, w), j - i - 1);
  return total;
}

BettiTable betti_table(int n, unsigned threads) {
  require_hochster_n(n, 4);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());

  const std::uint64_t subset_count = std::uint64_t{1} << n;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, subset_count));
  // partial[t][j][d + 1] accumulates dim H̃_d over |W| = j; C_n[W] has
  // dimension at most one so d ranges over {-1, 0, 1}.
  using Partial = std::vector<std::array<std::uint64_t, 3>>;
  std::vector<Partial> partial(threads, Partial(static_cast<std::size_t>(n) + 1));
  std::vector<std::exception_ptr> failures(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        try {
          for (std::uint64_t mask = t; mask < subset_count; mask += threads) {
            const VertexSet w = VertexSet::from_mask(mask);
            const SimplicialComplex complex = cycle_complex(n, w);
            const int top = std::max(complex.max_dim(), 1);
            for (int d = -1; d <= top; ++d) {
              const std::size_t dim = reduced_betti_dim(complex, d);
              if (dim == 0) continue;
              if (d > 1) throw Error(ErrorKind::InvariantViolation, "homology above dimension one");
              partial[t][static_cast<std::size_t>(std::popcount(mask))][static_cast<std::size_t>(d + 1)] += dim;
            }
          }
        } catch (...) {
          failures[t] = std::current_exception();
        }
      });
    }
  }

  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  BettiTable table{n, {}};
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= j; ++i) {
      const int d = j - i - 1;
      std::uint64_t value = 0;
      if (d >= -1 && d <= 1) {
        for (const Partial& p : partial) value += p[static_cast<std::size_t>(j)][static_cast<std::size_t>(d + 1)];
      }
      table.entries[{i, j}] = value;
    }
  }
  return table;
}

std::uint64_t linear_strand(int n, int j) {
  if (n < 4 || n > VertexSet::kMaxVertex) throw Error(ErrorKind::Domain, "linear strand needs n >= 4, got " + std::to_string(n));
  if (j < 2 || j > n - 2) {
    throw Error(ErrorKind::Domain, "linear strand needs 2 <= j <= n-2, got j=" + std::to_string(j));
  }
  std::uint64_t total = 0;
  for (const VertexSet& w : subsets_of_size(n, j)) total += restrict(n, w).component_count() - 1;
  return total;
}

}  // namespace cyclebetti
