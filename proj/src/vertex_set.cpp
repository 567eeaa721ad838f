#include "cyclebetti/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "cyclebetti/error.hpp"

namespace cyclebetti {

namespace {

std::uint64_t bit(int v) {
  if (v < 1 || v > VertexSet::kMaxVertex) {
    throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(v) + " outside 1.." +
                                           std::to_string(VertexSet::kMaxVertex));
  }
  return std::uint64_t{1} << (v - 1);
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) insert(v);
}

VertexSet::VertexSet(std::span<const int> vertices) {
  for (int v : vertices) insert(v);
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  if (mask >> kMaxVertex) throw Error(ErrorKind::OutOfRange, "mask uses bit 64");
  VertexSet s;
  s.mask_ = mask;
  return s;
}

VertexSet VertexSet::full(int n) {
  if (n < 0 || n > kMaxVertex) throw Error(ErrorKind::OutOfRange, "cannot build {1.." + std::to_string(n) + "}");
  return from_mask(n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)));
}

bool VertexSet::contains(int v) const noexcept {
  return v >= 1 && v <= kMaxVertex && (mask_ >> (v - 1) & 1U);
}

void VertexSet::insert(int v) { mask_ |= bit(v); }

void VertexSet::erase(int v) noexcept {
  if (v >= 1 && v <= kMaxVertex) mask_ &= ~(std::uint64_t{1} << (v - 1));
}

std::size_t VertexSet::size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

int VertexSet::min() const {
  if (empty()) throw Error(ErrorKind::Domain, "min of empty vertex set");
  return std::countr_zero(mask_) + 1;
}

int VertexSet::max() const {
  if (empty()) throw Error(ErrorKind::Domain, "max of empty vertex set");
  return 64 - std::countl_zero(mask_);
}

std::vector<int> VertexSet::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

VertexSet VertexSet::complement(int n) const { return from_mask(full(n).mask_ & ~mask_); }

bool VertexSet::within(int n) const noexcept {
  if (n >= kMaxVertex) return true;
  if (n <= 0) return mask_ == 0;
  return (mask_ >> n) == 0;
}

std::strong_ordering operator<=>(const VertexSet& lhs, const VertexSet& rhs) {
  const auto a = lhs.elements();
  const auto b = rhs.elements();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::string format_vertex_set(const VertexSet& set) {
  std::string out = "{";
  bool first = true;
  for (int v : set.elements()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

VertexSet parse_vertex_set(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') compact += c;
  }
  std::string_view body = compact;
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw Error(ErrorKind::Parse, "unbalanced braces in '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  VertexSet out;
  if (body.empty()) return out;
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t comma = std::min(body.find(',', start), body.size());
    const std::string_view token = body.substr(start, comma - start);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::Parse, "bad vertex '" + std::string(token) + "' in '" + std::string(text) + "'");
    }
    if (out.contains(v)) throw Error(ErrorKind::Parse, "duplicate vertex " + std::to_string(v));
    out.insert(v);
    start = comma + 1;
  }
  return out;
}

std::vector<VertexSet> subsets_of_size(int n, int k) {
  std::vector<VertexSet> out;
  if (k < 0 || k > n || n > VertexSet::kMaxVertex) return out;
  std::vector<int> combo(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.emplace_back(std::span<const int>(combo));
    int i = k - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++combo[static_cast<std::size_t>(i)];
    for (int t = i + 1; t < k; ++t) combo[static_cast<std::size_t>(t)] = combo[static_cast<std::size_t>(t - 1)] + 1;
  }
  return out;
}

}  // namespace cyclebetti
