#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cyclebetti/vertex_set.hpp"

namespace cyclebetti {

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix over the integers; ranks are taken over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(Matrix m);
Matrix multiply(const Matrix& lhs, const Matrix& rhs);

/// Sorted vertex list.
using Face = std::vector<int>;

/// Finite simplicial complex on {1..vertex_count}.
///
/// The void complex has no faces at all. Any other complex contains the
/// empty face; `{∅}` alone is the irrelevant complex. Faces of each
/// dimension are kept in lexicographic order.
class SimplicialComplex {
 public:
  static SimplicialComplex void_complex(int vertex_count = 0);
  /// Downward closure of `generators` plus the empty face.
  static SimplicialComplex from_faces(int vertex_count, const std::vector<Face>& generators);

  int vertex_count() const noexcept { return vertex_count_; }
  bool is_void() const noexcept { return void_; }
  /// -1 for both the void and the irrelevant complex.
  int max_dim() const noexcept { return std::max(-1, static_cast<int>(by_dim_.size()) - 2); }
  /// Faces of dimension d (size d+1); empty outside [-1, max_dim].
  const std::vector<Face>& faces(int d) const;
  std::size_t face_count() const noexcept;
  bool contains(const Face& face) const;

 private:
  int vertex_count_ = 0;
  bool void_ = true;
  std::vector<std::vector<Face>> by_dim_;  // index d + 1
};

/// C_n[W] as a complex of dimension at most one.
SimplicialComplex cycle_complex(int n, const VertexSet& w);

/// ∂_d: rows are (d-1)-faces, columns d-faces, both lexicographic. Removing
/// the vertex at position p of a face contributes (-1)^p.
Matrix boundary_matrix(const SimplicialComplex& complex, int d);

/// dim H̃_d(K; Q) = nullity(∂_d) - rank(∂_{d+1}). Requires d >= -1.
std::size_t reduced_betti_dim(const SimplicialComplex& complex, int d);

struct GraphHomology {
  std::size_t h_neg1 = 0;
  std::size_t h0 = 0;
  std::size_t h1 = 0;

  friend bool operator==(const GraphHomology&, const GraphHomology&) = default;
};

/// Reduced homology of C_n[W] from vertex, edge and component counts.
GraphHomology graph_homology_oracle(int n, const VertexSet& w);

}  // namespace cyclebetti
