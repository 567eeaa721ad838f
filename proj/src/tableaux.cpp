#include "cyclebetti/tableaux.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "cyclebetti/error.hpp"

namespace cyclebetti {

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t r = 0; r < parts_.size(); ++r) {
    if (parts_[r] <= 0) throw Error(ErrorKind::Domain, "partition parts must be positive");
    if (r > 0 && parts_[r] > parts_[r - 1]) throw Error(ErrorKind::Domain, "partition parts must be weakly decreasing");
  }
}

int Shape::size() const noexcept {
  int total = 0;
  for (int p : parts_) total += p;
  return total;
}

int Shape::column_length(int c) const noexcept {
  int len = 0;
  for (int p : parts_) {
    if (p >= c) ++len;
  }
  return len;
}

Shape Shape::conjugate() const {
  std::vector<int> parts;
  const int width = parts_.empty() ? 0 : parts_.front();
  for (int c = 1; c <= width; ++c) parts.push_back(column_length(c));
  return Shape(std::move(parts));
}

Shape hook_shape(int n, int j) {
  if (n < 4) throw Error(ErrorKind::Domain, "hook shape needs n >= 4, got " + std::to_string(n));
  if (j < 2 || j > n - 2) throw Error(ErrorKind::Domain, "hook shape needs 2 <= j <= n-2, got j=" + std::to_string(j));
  std::vector<int> parts{j, 2};
  parts.insert(parts.end(), static_cast<std::size_t>(n - j - 2), 1);
  return Shape(std::move(parts));
}

std::vector<Shape> partitions(int n) {
  if (n < 0) throw Error(ErrorKind::Domain, "partitions of a negative integer");
  std::vector<Shape> out;
  std::vector<int> current;
  std::function<void(int, int)> extend = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      extend(remaining - part, part);
      current.pop_back();
    }
  };
  extend(n, n);
  return out;
}

Tableau Tableau::from_rows(std::vector<std::vector<int>> rows) {
  std::vector<int> parts;
  for (const auto& row : rows) {
    if (row.empty()) throw Error(ErrorKind::Validation, "shape: empty row");
    if (!parts.empty() && row.size() > static_cast<std::size_t>(parts.back())) {
      throw Error(ErrorKind::Validation, "shape: row lengths must be weakly decreasing");
    }
    parts.push_back(static_cast<int>(row.size()));
  }
  Tableau t;
  t.shape_ = Shape(std::move(parts));
  const int n = t.shape_.size();

  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& row : rows) {
    for (int v : row) {
      if (v < 1 || v > n) throw Error(ErrorKind::Validation, "entries: " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (seen[static_cast<std::size_t>(v)]) throw Error(ErrorKind::Validation, "entries: " + std::to_string(v) + " appears twice");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0 && rows[r][c - 1] >= rows[r][c]) {
        throw Error(ErrorKind::Validation, "row-increase: row " + std::to_string(r + 1) + " is not strictly increasing");
      }
      if (r > 0 && rows[r - 1][c] >= rows[r][c]) {
        throw Error(ErrorKind::Validation, "column-increase: column " + std::to_string(c + 1) + " is not strictly increasing");
      }
    }
  }
  t.rows_ = std::move(rows);
  return t;
}

int Tableau::at(int row, int col) const {
  if (row < 1 || row > shape_.row_count() || col < 1 || col > shape_.parts()[static_cast<std::size_t>(row - 1)]) {
    throw Error(ErrorKind::Shape, "no box at (" + std::to_string(row) + "," + std::to_string(col) + ")");
  }
  return rows_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)];
}

std::pair<int, int> Tableau::position_of(int value) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    const auto it = std::find(row.begin(), row.end(), value);
    if (it != row.end()) return {static_cast<int>(r) + 1, static_cast<int>(it - row.begin()) + 1};
  }
  throw Error(ErrorKind::Domain, std::to_string(value) + " is not an entry");
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> word;
  for (const auto& row : rows_) word.insert(word.end(), row.begin(), row.end());
  return word;
}

std::vector<Tableau> enumerate_syt(const Shape& shape) {
  const int n = shape.size();
  const auto& parts = shape.parts();
  std::vector<std::vector<int>> rows(parts.size());
  std::vector<Tableau> out;

  // Entry k goes at the end of any row that still has room and is shorter
  // than the row above it.
  std::function<void(int)> place = [&](int k) {
    if (k > n) {
      out.push_back(Tableau::from_rows(rows));
      return;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::size_t len = rows[r].size();
      if (len == static_cast<std::size_t>(parts[r])) continue;
      if (r > 0 && rows[r - 1].size() <= len) continue;
      rows[r].push_back(k);
      place(k + 1);
      rows[r].pop_back();
    }
  };
  place(1);

  std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) { return a.reading_word() < b.reading_word(); });
  return out;
}

std::uint64_t count_syt_hook_length(const Shape& shape) {
  using boost::multiprecision::cpp_int;
  const auto& parts = shape.parts();
  cpp_int numerator = 1;
  for (int k = 2; k <= shape.size(); ++k) numerator *= k;
  cpp_int hooks = 1;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    for (int c = 1; c <= parts[r]; ++c) {
      const int arm = parts[r] - c;
      const int leg = shape.column_length(c) - static_cast<int>(r) - 1;
      hooks *= arm + leg + 1;
    }
  }
  if (numerator % hooks != 0) throw Error(ErrorKind::InvariantViolation, "hook product does not divide n!");
  const cpp_int count = numerator / hooks;
  if (count > std::numeric_limits<std::uint64_t>::max()) throw Error(ErrorKind::Domain, "tableau count exceeds 64 bits");
  return static_cast<std::uint64_t>(count);
}

std::uint64_t count_syt_hook_length(std::span<const int> parts) {
  return count_syt_hook_length(Shape(std::vector<int>(parts.begin(), parts.end())));
}

Tableau transpose(const Tableau& tableau) {
  const Shape conj = tableau.shape().conjugate();
  std::vector<std::vector<int>> rows(conj.parts().size());
  for (std::size_t c = 0; c < rows.size(); ++c) {
    for (int r = 1; r <= conj.parts()[c]; ++r) rows[c].push_back(tableau.at(r, static_cast<int>(c) + 1));
  }
  return Tableau::from_rows(std::move(rows));
}

Tableau parse_tableau(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') compact += c;
  }
  if (compact.empty()) throw Error(ErrorKind::Parse, "empty tableau text");

  std::vector<std::vector<int>> rows;
  std::vector<int> row;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= compact.size(); ++i) {
    if (i < compact.size() && compact[i] != ',' && compact[i] != ';') continue;
    const std::string_view token(compact.data() + start, i - start);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::Parse, "bad entry '" + std::string(token) + "' in '" + std::string(text) + "'");
    }
    row.push_back(v);
    if (i == compact.size() || compact[i] == ';') {
      rows.push_back(std::move(row));
      row.clear();
    }
    start = i + 1;
  }
  return Tableau::from_rows(std::move(rows));
}

std::string format_tableau(const Tableau& tableau) {
  std::string out;
  for (std::size_t r = 0; r < tableau.rows().size(); ++r) {
    if (r > 0) out += ';';
    const auto& row = tableau.rows()[r];
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += std::to_string(row[c]);
    }
  }
  return out;
}

}  // namespace cyclebetti
