#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mmu/error.hpp"
#include "mmu/exact.hpp"
#include "mmu/matfq.hpp"
#include "mmu/subspace.hpp"

namespace mmu {

/// Element of k[M_n]: finitely many matrices with non-zero rational coefficients.
class AlgElem {
 public:
  using Terms = std::map<MatKey, Rat>;

  /// Throws InvalidArgument when n x n matrices over f do not have keys.
  AlgElem(const Field& f, int n);
  /// c [m].
  static AlgElem basis(const Mat& m, const Rat& c = 1);

  const Field& field() const { return *field_; }
  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rat coeff(const Mat& m) const;
  Rat coeff(MatKey k) const;
  Mat matrix(MatKey k) const { return mat_from_key(*field_, n_, n_, k); }

  /// Adds c to the coefficient of [m], dropping the term if it cancels.
  void add_term(const Mat& m, const Rat& c);
  void add_term(MatKey k, const Rat& c);

  /// Largest rank in the support; -1 for zero.
  int max_rank() const;

  friend bool operator==(const AlgElem& a, const AlgElem& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  const Field* field_;
  int n_;
  Terms terms_;
};

AlgElem alg_add(const AlgElem& a, const AlgElem& b);
AlgElem alg_sub(const AlgElem& a, const AlgElem& b);
AlgElem alg_scale(const AlgElem& a, const Rat& c);
/// Convolution product. Throws BudgetExceeded when |supp a| * |supp b| exceeds pair_budget.
AlgElem alg_mul(const AlgElem& a, const AlgElem& b, std::uint64_t pair_budget = kDefaultProductBudget);
/// [g^{-1}] a [g] computed by relabelling.
AlgElem conjugate(const AlgElem& a, const Mat& g);
/// Linear extension of [x] -> [x^T].
AlgElem transpose_antiinvolution(const AlgElem& a);

/// Closed-form unit of the rank-r ideal; r = n gives [I_n].
AlgElem eta_r(const Field& f, int n, int r, std::uint64_t budget = kDefaultBudget);
/// The j-indexed double-sum form of eta_r.
AlgElem eta_r_alt(const Field& f, int n, int r, std::uint64_t budget = kDefaultBudget);
/// -mu(n)^{-1} sum of mu(srk m)[m] over singular semi-idempotents.
AlgElem eta_corank1(const Field& f, int n, std::uint64_t budget = kDefaultBudget);

/// Idempotent attached to a subspace W.
AlgElem eta_W(const Subspace& w, std::uint64_t budget = kDefaultBudget);

/// i_{W,U}(T): T acting on W in the basis of W, zero on U. T is dim W x dim W.
Mat embed_endomorphism(const Subspace& w, const Subspace& u, const Mat& t);
/// Sum over all semi-idempotent T: W -> W. Throws InvalidArgument unless V = W ⊕ U.
AlgElem epsilon_WU(const Subspace& w, const Subspace& u);
/// Sum over singular semi-idempotent T: W -> W.
AlgElem epsilon_star_WU(const Subspace& w, const Subspace& u);

/// Sum of eta_{W'} over W' ⊆ W.
AlgElem E_prime_W(const Subspace& w, std::uint64_t budget = kDefaultBudget);
/// D_W = mu(dim W)^{-1} sum of mu(srk T)[T] over semi-idempotent T with im T = W.
/// Equals E_prime_W only for W = 0 and W = V; in general
/// eta_W = q^{-d(n-d)} mu(d)^{-1} sum_{W' ⊆ W} mu(dim W') D_{W'}, d = dim W.
AlgElem E_prime_W_direct(const Subspace& w, std::uint64_t budget = kDefaultBudget);

/// Group elements used for conjugation checks: all of GL_n when
/// |GL_n| <= kKuhnFullGroupLimit, otherwise a generating set.
inline constexpr std::uint64_t kKuhnFullGroupLimit = 10'000;
std::vector<Mat> conjugation_test_set(const Field& f, int n, bool* full_group = nullptr);
/// Generators of GL_n(F_q): a transposition, an n-cycle, diag(primitive, 1, ...), I + E_12.
std::vector<Mat> gl_generators(const Field& f, int n);

struct KuhnReport {
  bool passed = false;
  bool conjugation_invariant = false;
  bool fixes_e = false;
  bool full_group = false;
  std::size_t group_elements = 0;
  std::string detail;
};

/// Conjugation invariance plus u [e_{n,r}] = [e_{n,r}].
KuhnReport kuhn_check(const AlgElem& u, int r);

struct VerifyOptions {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t pair_budget = kDefaultProductBudget;
  unsigned jobs = 1;
};

struct UnitReport {
  bool passed = false;
  /// Every product u[m] and [m]u was computed.
  bool exhaustive = false;
  /// The exhaustive check was over budget and the Kuhn criterion was used instead.
  bool fallback = false;
  std::uint64_t matrices_checked = 0;
  std::optional<Mat> counterexample;
  std::string detail;
};

/// Checks u[m] = [m] = [m]u for every m of rank <= r.
UnitReport verify_unit(const AlgElem& u, int r, const VerifyOptions& opts = {});

/// Exact rendering "c1*[m1] + c2*[m2] + ..." for diagnostics.
std::string to_string(const AlgElem& a);

}  // namespace mmu
