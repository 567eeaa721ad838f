#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyclebetti {

/// Integer partition in English notation: parts weakly decreasing, no zeros.
class Shape {
 public:
  Shape() = default;
  /// Throws Error(Domain) unless `parts` is a partition.
  explicit Shape(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept;
  int row_count() const noexcept { return static_cast<int>(parts_.size()); }
  /// Length of column c (1-based).
  int column_length(int c) const noexcept;
  Shape conjugate() const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  std::vector<int> parts_;
};

/// The shape (j, 2, 1^{n-j-2}). Requires n >= 4 and 2 <= j <= n - 2.
Shape hook_shape(int n, int j);

/// Every partition of n, parts in decreasing lexicographic order.
std::vector<Shape> partitions(int n);

/// Standard Young tableau. Only constructible through validation, so every
/// instance has entries exactly 1..n with rows and columns strictly
/// increasing.
class Tableau {
 public:
  /// Throws Error(Validation) naming the broken invariant.
  static Tableau from_rows(std::vector<std::vector<int>> rows);

  const Shape& shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int size() const noexcept { return shape_.size(); }
  /// T(row, col), both 1-based.
  int at(int row, int col) const;
  /// 1-based (row, col) of `value`.
  std::pair<int, int> position_of(int value) const;
  /// Row-major reading word.
  std::vector<int> reading_word() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  Tableau() = default;

  Shape shape_;
  std::vector<std::vector<int>> rows_;
};

/// All standard fillings, sorted lexicographically by reading word.
std::vector<Tableau> enumerate_syt(const Shape& shape);

/// n! / (product of hook lengths). Throws Error(Domain) if the count does not
/// fit in 64 bits.
std::uint64_t count_syt_hook_length(const Shape& shape);
/// Same, validating raw parts first.
std::uint64_t count_syt_hook_length(std::span<const int> parts);

/// T*(i, j) = T(j, i).
Tableau transpose(const Tableau& tableau);

/// Rows separated by ';', entries by ','. "1,2;3,4;5". Whitespace ignored.
Tableau parse_tableau(std::string_view text);
std::string format_tableau(const Tableau& tableau);

}  // namespace cyclebetti
