#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mmu/error.hpp"
#include "mmu/exact.hpp"
#include "mmu/matfq.hpp"
#include "mmu/qcomb.hpp"

namespace mmu {

/// Representation of GL_r(F_q) stored as a total map g -> rho(g).
struct GroupRep {
  const Field* field = nullptr;
  int r = 0;
  int dim = 0;
  std::string name;
  std::map<Mat, RatMatrix> images;

  /// Throws InvalidArgument for matrices outside GL_r.
  const RatMatrix& operator()(const Mat& g) const;
  Rat character(const Mat& g) const { return (*this)(g).trace(); }
};

/// Extends generator images to all of GL_r by breadth-first closure,
/// using rho(g s) = rho(g) rho(s). Throws InvalidArgument if two words for
/// the same element disagree or the generators miss part of the group.
GroupRep rep_from_generators(const Field& f, int r, std::string name, int dim,
                             const std::vector<std::pair<Mat, RatMatrix>>& generators);
GroupRep trivial_rep(const Field& f, int r);
/// rho(1) = I and rho(g) rho(h) = rho(gh) for all pairs.
bool is_homomorphism(const GroupRep& rho);

struct IrrepSet {
  std::vector<GroupRep> reps;
  bool complete = false;  // sum of dim^2 equals |GL_r|
};

/// Trivial representation for every r; trivial, sign and the 2-dimensional
/// representation for GL_2(F_2), which is isomorphic to S_3.
IrrepSet builtin_irreps(const Field& f, int r);

/// Character values keyed by matrix key.
using CharTable = std::map<MatKey, Rat>;

/// Finite-dimensional k[M_n]-module with every action matrix materialized.
struct MonoidModule {
  const Field* field = nullptr;
  int n = 0;
  int dim = 0;
  std::string name;
  std::map<MatKey, RatMatrix> action;

  const RatMatrix& operator()(const Mat& m) const;
};

inline constexpr std::size_t kDefaultModuleDimBudget = 512;

/// L_n(pi) on V (x) k^N, N = #{r-dim subspaces}: [m] acts by the sum over
/// (i, j) with m(U_i) = U_j of pi(f_j^{-1} m f_i) (x) E_{j,i}.
MonoidModule build_L(int n, const GroupRep& pi, std::size_t dim_budget = kDefaultModuleDimBudget);
/// k[M_{n,m}] = V^{(x) m} with X -> aX; m = 1 gives V = k[F_q^n].
MonoidModule tensor_power_module(const Field& f, int n, int m, std::size_t dim_budget = kDefaultModuleDimBudget);

CharTable character(const MonoidModule& mod);
/// sum over r-dim U with m(U) = U of tr pi(f_U^{-1} m f_U), computed without
/// building the module.
CharTable character_formula(int n, const GroupRep& pi);

/// action(a) action(b) = action(ab) for all pairs and action(I) = I. On
/// failure the first bad pair is described in detail.
bool module_axiom_holds(const MonoidModule& mod, std::string* detail = nullptr);

/// Character restricted to GL_n.
CharTable restrict_to_group_char(const MonoidModule& mod);
/// Character of Ind from P_{r,n-r} to GL_n of pi inflated through the Levi
/// factor GL_r.
CharTable parabolic_induction_char(const GroupRep& pi, int n, std::uint64_t budget = 1'000'000);

/// [e_{n,s}] M as a k[M_s]-module, with a in M_s acting as diag(a, 0).
MonoidModule restrict_to_submonoid(const MonoidModule& mod, int s);

/// chi(m) = chi(m^T) for every m in M_n.
bool transpose_invariant(const CharTable& chi, const Field& f, int n);
bool self_duality_check(const MonoidModule& mod);

/// Conjugacy classes of GL_n, each listed in key order, classes ordered by
/// their first element.
std::vector<std::vector<Mat>> gl_conjugacy_classes(const Field& f, int n, std::uint64_t budget = 1'000'000);

/// Simple module label (r, fixture name), printed as name_r.
struct SimpleLabel {
  int r = 0;
  std::string name;

  std::string to_string() const { return name + "_" + std::to_string(r); }
  friend auto operator<=>(const SimpleLabel&, const SimpleLabel&) = default;
  friend bool operator==(const SimpleLabel&, const SimpleLabel&) = default;
};

struct SimpleModule {
  SimpleLabel label;
  GroupRep pi;
  MonoidModule module;
};

/// L_n(pi) for every built-in irreducible pi of GL_r, 0 <= r <= n. Throws
/// InvalidArgument unless every built-in set is complete.
std::vector<SimpleModule> simple_modules(const Field& f, int n);

/// Multiplicities of the given simples in mod, from the exact character
/// system. Throws ArithmeticError if no non-negative integer solution exists.
std::vector<std::pair<SimpleLabel, long>> decompose(const MonoidModule& mod, const std::vector<SimpleModule>& simples);

/// Multiplicities keyed by (opaque pure label, partition).
using MultiplicityMap = std::map<std::pair<std::string, Partition>, long>;

/// n(pi{lambda}) = sum over lambda/mu in HS of m(pi{mu}), for |lambda| <= bound.
MultiplicityMap multiplicities_n_from_m(const MultiplicityMap& m, int bound);
/// m(pi{lambda}) = sum over lambda/mu in VS of (-1)^{|lambda|-|mu|} n(pi{mu}).
MultiplicityMap multiplicities_m_from_n(const MultiplicityMap& n, int bound);

}  // namespace mmu
