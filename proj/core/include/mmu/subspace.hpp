#pragma once

#include <compare>
#include <string>
#include <vector>

#include "mmu/matfq.hpp"

namespace mmu {

/// Subspace of F_q^n, stored as the RREF of a spanning set of row vectors.
class Subspace {
 public:
  Subspace() = default;
  /// Row space of the given k x n matrix.
  static Subspace span_of_rows(const Mat& rows);
  /// Column space of the given n x k matrix.
  static Subspace span_of_columns(const Mat& cols);
  static Subspace zero(const Field& f, int n);
  static Subspace whole(const Field& f, int n);

  const Field& field() const { return basis_.field(); }
  int n() const { return basis_.cols(); }
  int dim() const { return basis_.rows(); }
  /// dim x n RREF basis; row i is the image of the i-th standard basis vector under the canonical iso.
  const Mat& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// n x dim matrix F_U whose columns are the basis vectors.
  Mat frame() const;
  /// Coordinates of the columns of v (n x k, each in U) with respect to basis(); dim x k.
  Mat coordinates(const Mat& v) const;
  /// n x (n - dim) matrix of standard basis vectors at the non-pivot positions; spans a complement.
  Mat complement_frame() const;

  bool contains_vector(const std::vector<Elem>& v) const;
  bool contains(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  /// True iff this ⊕ other = F_q^n.
  bool is_complement(const Subspace& other) const;

  std::string to_string() const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  /// Dimension first, then RREF entries.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) { return a.basis_ <=> b.basis_; }

 private:
  explicit Subspace(Mat rref_basis, std::vector<int> pivots)
      : basis_(std::move(rref_basis)), pivots_(std::move(pivots)) {}

  Mat basis_;
  std::vector<int> pivots_;
};

/// All r-dimensional subspaces of F_q^n in Subspace order.
std::vector<Subspace> enumerate_subspaces(const Field& f, int n, int r);
/// All subspaces of every dimension, dimension ascending.
std::vector<Subspace> enumerate_all_subspaces(const Field& f, int n);
/// Image of U under the n x n matrix m.
Subspace image_of(const Mat& m, const Subspace& u);
/// Image of m as a subspace.
Subspace image_of(const Mat& m);

}  // namespace mmu
