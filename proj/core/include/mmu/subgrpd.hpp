#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "mmu/algebra.hpp"
#include "mmu/exact.hpp"
#include "mmu/subspace.hpp"

namespace mmu {

/// Basis element [iso : src -> dst] of k[G_{n,r}]; iso is the r x r matrix
/// f_dst^{-1} a f_src in the canonical RREF coordinates.
struct GroupoidBasis {
  Subspace src;
  Subspace dst;
  Mat iso;

  friend auto operator<=>(const GroupoidBasis&, const GroupoidBasis&) = default;
  friend bool operator==(const GroupoidBasis&, const GroupoidBasis&) = default;
};

/// Element of k[G_{n,r}].
class GroupoidElem {
 public:
  GroupoidElem(const Field& f, int n, int r) : field_(&f), n_(n), r_(r) {}

  const Field& field() const { return *field_; }
  int n() const { return n_; }
  int r() const { return r_; }
  const std::map<GroupoidBasis, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const GroupoidBasis& b) const;
  void add_term(const GroupoidBasis& b, const Rat& c);

  friend bool operator==(const GroupoidElem& a, const GroupoidElem& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.r_ == b.r_ && a.terms_ == b.terms_;
  }

 private:
  const Field* field_;
  int n_;
  int r_;
  std::map<GroupoidBasis, Rat> terms_;
};

/// f_U as a map F^r -> U: the n x r frame matrix.
inline Mat canonical_iso(const Subspace& u) { return u.frame(); }

/// Restriction of m to U as a groupoid arrow; dst.dim() < U.dim() signals that m drops rank on U.
GroupoidBasis restrict_to(const Mat& m, const Subspace& u);

/// Sum over r-dimensional U with dim m(U) = r of [m|_U : U -> m(U)], extended linearly.
GroupoidElem psi_r(const AlgElem& a, int r);
/// (psi_0(a), ..., psi_n(a)).
std::vector<GroupoidElem> psi_full(const AlgElem& a);
/// Composition: a term of x times a term of y is [x o y] when dst(y) = src(x), else 0.
GroupoidElem groupoid_mul(const GroupoidElem& x, const GroupoidElem& y);
/// sum_U [id_U].
GroupoidElem groupoid_unit(const Field& f, int n, int r);
/// [id_W] as a groupoid element.
GroupoidElem groupoid_identity_at(const Subspace& w);

/// Element of the group algebra k[GL_r], keyed by matrix.
using GroupAlgElem = std::map<Mat, Rat>;

/// N x N matrix over k[GL_r], indexed by the enumerated r-dimensional subspaces.
struct GroupoidMatrix {
  std::vector<Subspace> objects;
  std::vector<std::vector<GroupAlgElem>> blocks;  // blocks[j][i]

  friend bool operator==(const GroupoidMatrix&, const GroupoidMatrix&) = default;
};

/// phi([a : U_i -> U_j]) = [f_j^{-1} a f_i] E_{j,i}.
GroupoidMatrix groupoid_to_matrix_algebra(const GroupoidElem& x);
GroupoidMatrix block_mul(const GroupoidMatrix& a, const GroupoidMatrix& b);

/// Exact rank of the linear map k[M_n] -> prod_r k[G_{n,r}] on the basis [m].
std::size_t psi_full_rank(const Field& f, int n, std::uint64_t budget = kDefaultBudget);
/// sum_r dim k[G_{n,r}] = sum_r N_r^2 |GL_r|.
BigInt groupoid_algebra_dimension(const Field& f, int n);

/// [m] eta_U for an extension m of f : U -> U' that vanishes on the standard complement of U.
AlgElem preimage_of_groupoid_basis(const GroupoidBasis& b, std::uint64_t budget = kDefaultBudget);

std::string to_string(const GroupoidElem& x);

}  // namespace mmu
