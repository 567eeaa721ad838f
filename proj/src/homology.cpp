#include "cyclebetti/homology.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cyclebetti/cycle.hpp"
#include "cyclebetti/error.hpp"

namespace cyclebetti {

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

std::size_t rank(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  BigInt prev_pivot = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m.at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m.at(pivot, k), m.at(r, k));
    }
    // Bareiss step: every update is exactly divisible by the previous pivot.
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        m.at(i, k) = (m.at(r, c) * m.at(i, k) - m.at(i, c) * m.at(r, k)) / prev_pivot;
      }
      m.at(i, c) = 0;
    }
    prev_pivot = m.at(r, c);
    ++r;
  }
  return r;
}

Matrix multiply(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw Error(ErrorKind::Domain, "matrix shapes do not compose");
  Matrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      if (lhs.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out.at(i, j) += lhs.at(i, k) * rhs.at(k, j);
    }
  }
  return out;
}

SimplicialComplex SimplicialComplex::void_complex(int vertex_count) {
  if (vertex_count < 0) throw Error(ErrorKind::Domain, "negative vertex count");
  SimplicialComplex k;
  k.vertex_count_ = vertex_count;
  return k;
}

SimplicialComplex SimplicialComplex::from_faces(int vertex_count, const std::vector<Face>& generators) {
  if (vertex_count < 0) throw Error(ErrorKind::Domain, "negative vertex count");
  std::set<Face> closed{Face{}};
  for (Face face : generators) {
    std::sort(face.begin(), face.end());
    if (std::adjacent_find(face.begin(), face.end()) != face.end()) {
      throw Error(ErrorKind::Domain, "face repeats a vertex");
    }
    for (int v : face) {
      if (v < 1 || v > vertex_count) {
        throw Error(ErrorKind::OutOfRange, "face vertex " + std::to_string(v) + " outside 1.." + std::to_string(vertex_count));
      }
    }
    if (face.size() > 20) throw Error(ErrorKind::Domain, "faces above dimension 19 are not supported");
    const std::uint32_t subsets = std::uint32_t{1} << face.size();
    for (std::uint32_t bits = 1; bits < subsets; ++bits) {
      Face sub;
      for (std::size_t i = 0; i < face.size(); ++i) {
        if (bits >> i & 1U) sub.push_back(face[i]);
      }
      closed.insert(std::move(sub));
    }
  }

  SimplicialComplex k;
  k.vertex_count_ = vertex_count;
  k.void_ = false;
  for (const Face& face : closed) {  // std::set order is lexicographic
    const std::size_t slot = face.size();
    if (k.by_dim_.size() <= slot) k.by_dim_.resize(slot + 1);
    k.by_dim_[slot].push_back(face);
  }
  return k;
}

const std::vector<Face>& SimplicialComplex::faces(int d) const {
  static const std::vector<Face> kNone;
  if (d < -1 || d + 1 >= static_cast<int>(by_dim_.size())) return kNone;
  return by_dim_[static_cast<std::size_t>(d + 1)];
}

std::size_t SimplicialComplex::face_count() const noexcept {
  return std::accumulate(by_dim_.begin(), by_dim_.end(), std::size_t{0},
                         [](std::size_t acc, const auto& faces) { return acc + faces.size(); });
}

bool SimplicialComplex::contains(const Face& face) const {
  Face sorted = face;
  std::sort(sorted.begin(), sorted.end());
  const auto& bucket = faces(static_cast<int>(sorted.size()) - 1);
  return std::binary_search(bucket.begin(), bucket.end(), sorted);
}

SimplicialComplex cycle_complex(int n, const VertexSet& w) {
  if (!w.within(n)) throw Error(ErrorKind::OutOfRange, format_vertex_set(w) + " is not inside {1.." + std::to_string(n) + "}");
  std::vector<Face> generators;
  for (int v : w.elements()) generators.push_back({v});
  for (const auto& [u, v] : cycle_edges(n)) {
    if (w.contains(u) && w.contains(v)) generators.push_back({u, v});
  }
  return SimplicialComplex::from_faces(n, generators);
}

Matrix boundary_matrix(const SimplicialComplex& complex, int d) {
  const auto& lower = complex.faces(d - 1);
  const auto& upper = complex.faces(d);
  Matrix m(lower.size(), upper.size());
  for (std::size_t c = 0; c < upper.size(); ++c) {
    const Face& face = upper[c];
    for (std::size_t p = 0; p < face.size(); ++p) {
      Face sub;
      sub.reserve(face.size() - 1);
      for (std::size_t q = 0; q < face.size(); ++q) {
        if (q != p) sub.push_back(face[q]);
      }
      const auto it = std::lower_bound(lower.begin(), lower.end(), sub);
      if (it == lower.end() || *it != sub) {
        throw Error(ErrorKind::InvariantViolation, "complex is not closed under taking faces");
      }
      m.at(static_cast<std::size_t>(it - lower.begin()), c) = (p % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

std::size_t reduced_betti_dim(const SimplicialComplex& complex, int d) {
  if (d < -1) throw Error(ErrorKind::Domain, "reduced homology needs d >= -1, got " + std::to_string(d));
  const Matrix down = boundary_matrix(complex, d);
  const std::size_t nullity = down.cols() - rank(down);
  return nullity - rank(boundary_matrix(complex, d + 1));
}

GraphHomology graph_homology_oracle(int n, const VertexSet& w) {
  if (!w.within(n)) throw Error(ErrorKind::OutOfRange, format_vertex_set(w) + " is not inside {1.." + std::to_string(n) + "}");
  if (w.empty()) return {1, 0, 0};

  // Union-find over the induced edges.
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  const std::size_t v = w.size();
  std::size_t e = 0;
  std::size_t c = v;
  for (const auto& [x, y] : cycle_edges(n)) {
    if (!w.contains(x) || !w.contains(y)) continue;
    ++e;
    const int rx = find(x);
    const int ry = find(y);
    if (rx != ry) {
      parent[static_cast<std::size_t>(rx)] = ry;
      --c;
    }
  }
  return {0, c - 1, e + c - v};
}

}  // namespace cyclebetti
