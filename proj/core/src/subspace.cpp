#include "mmu/subspace.hpp"

#include <algorithm>

namespace mmu {
namespace {

Mat stack_rows(const Mat& a, const Mat& b) {
  Mat out(a.field(), a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
  return out;
}

}  // namespace

Subspace Subspace::span_of_rows(const Mat& rows) {
  std::vector<int> piv;
  const Mat red = rref(rows, &piv);
  Mat basis(rows.field(), static_cast<int>(piv.size()), rows.cols());
  for (int i = 0; i < basis.rows(); ++i)
    for (int j = 0; j < basis.cols(); ++j) basis(i, j) = red(i, j);
  return Subspace(basis, piv);
}

Subspace Subspace::span_of_columns(const Mat& cols) { return span_of_rows(transpose(cols)); }

Subspace Subspace::zero(const Field& f, int n) { return Subspace(Mat(f, 0, n), {}); }

Subspace Subspace::whole(const Field& f, int n) { return span_of_rows(Mat::identity(f, n)); }

Mat Subspace::frame() const { return transpose(basis_); }

Mat Subspace::coordinates(const Mat& v) const {
  if (v.rows() != n()) throw InvalidArgument("coordinate vectors have the wrong length");
  Mat out(field(), dim(), v.cols());
  for (int i = 0; i < dim(); ++i)
    for (int k = 0; k < v.cols(); ++k) out(i, k) = v(pivots_[i], k);
  return out;
}

Mat Subspace::complement_frame() const {
  Mat out(field(), n(), n() - dim());
  int col = 0;
  for (int j = 0; j < n(); ++j)
    if (std::find(pivots_.begin(), pivots_.end(), j) == pivots_.end()) out(j, col++) = 1;
  return out;
}

bool Subspace::contains_vector(const std::vector<Elem>& v) const {
  if (static_cast<int>(v.size()) != n()) throw InvalidArgument("vector has the wrong length");
  Mat row(field(), 1, n());
  for (int j = 0; j < n(); ++j) row(0, j) = v[j];
  return mat_rank(stack_rows(basis_, row)) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  return other.dim() <= dim() && mat_rank(stack_rows(basis_, other.basis_)) == dim();
}

Subspace Subspace::sum(const Subspace& other) const { return span_of_rows(stack_rows(basis_, other.basis_)); }

Subspace Subspace::intersect(const Subspace& other) const {
  // Solve x B_1 = y B_2: left null space of [B_1; B_2] gives (x, -y).
  const int a = dim(), b = other.dim();
  if (a == 0 || b == 0) return zero(field(), n());
  const Field& f = field();
  const Mat stacked = stack_rows(basis_, other.basis_);  // (a+b) x n
  // Null space of stacked^T: vectors c with c * stacked = 0.
  std::vector<int> piv;
  const Mat red = rref(transpose(stacked), &piv);  // n x (a+b)
  std::vector<int> free_cols;
  for (int j = 0; j < a + b; ++j)
    if (std::find(piv.begin(), piv.end(), j) == piv.end()) free_cols.push_back(j);
  Mat gens(f, static_cast<int>(free_cols.size()), n());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::vector<Elem> c(static_cast<std::size_t>(a + b), 0);
    c[free_cols[k]] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) c[piv[i]] = f.neg(red(static_cast<int>(i), free_cols[k]));
    // The intersection vector is sum_{i<a} c_i * row_i(B_1).
    for (int i = 0; i < a; ++i) {
      if (!c[i]) continue;
      for (int j = 0; j < n(); ++j)
        gens(static_cast<int>(k), j) = f.add(gens(static_cast<int>(k), j), f.mul(c[i], basis_(i, j)));
    }
  }
  return span_of_rows(gens);
}

bool Subspace::is_complement(const Subspace& other) const {
  return dim() + other.dim() == n() && sum(other).dim() == n();
}

std::string Subspace::to_string() const { return "span" + basis_.to_string(); }

std::vector<Subspace> enumerate_subspaces(const Field& f, int n, int r) {
  if (r < 0 || r > n) throw InvalidArgument("subspace dimension out of range");
  std::vector<Subspace> out;
  std::vector<int> piv(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) piv[i] = i;
  while (true) {
    // Free slots: row i, columns after its pivot that are not pivots.
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < r; ++i)
      for (int j = piv[i] + 1; j < n; ++j)
        if (std::find(piv.begin(), piv.end(), j) == piv.end()) slots.emplace_back(i, j);
    Mat m(f, r, n);
    for (int i = 0; i < r; ++i) m(i, piv[i]) = 1;
    const auto top = static_cast<Elem>(f.q() - 1);
    while (true) {
      out.push_back(Subspace::span_of_rows(m));
      int k = static_cast<int>(slots.size()) - 1;
      while (k >= 0 && m(slots[k].first, slots[k].second) == top) {
        m(slots[k].first, slots[k].second) = 0;
        --k;
      }
      if (k < 0) break;
      ++m(slots[k].first, slots[k].second);
    }
    // Next pivot combination.
    int i = r - 1;
    while (i >= 0 && piv[i] == n - r + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int k = i + 1; k < r; ++k) piv[k] = piv[k - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> enumerate_all_subspaces(const Field& f, int n) {
  std::vector<Subspace> out;
  for (int r = 0; r <= n; ++r) {
    auto part = enumerate_subspaces(f, n, r);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Subspace image_of(const Mat& m, const Subspace& u) {
  if (m.cols() != u.n()) throw InvalidArgument("matrix and subspace dimensions differ");
  if (u.dim() == 0) return Subspace::zero(u.field(), m.rows());
  return Subspace::span_of_columns(mat_mul(m, u.frame()));
}

Subspace image_of(const Mat& m) { return Subspace::span_of_columns(m); }

}  // namespace mmu
