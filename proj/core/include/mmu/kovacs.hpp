#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mmu/algebra.hpp"
#include "mmu/exact.hpp"
#include "mmu/matfq.hpp"

namespace mmu {

/// Class-indexed linear system whose solution gives the unit coefficients.
///
/// Row Γ counts the semi-idempotent u of rank <= r with u e_{n,r} = u_Γ,
/// split by the class Γ' of u. Keys are rank sequences in ascending
/// lexicographic order; the class of e_{n,r} comes last.
struct KovacsSystem {
  int n = 0;
  int r = 0;
  int q = 0;
  std::vector<RankSequence> keys;
  RatMatrix a;
  std::vector<Rat> rhs;

  /// a(Γ, Γ') = 0 whenever Γ' < Γ.
  bool is_upper_triangular() const;
  /// Every diagonal entry is q^k for some k >= 0.
  bool diagonal_is_q_powers() const;
};

/// Rank sequences of semi-idempotent classes with rank <= r, ascending.
std::vector<RankSequence> class_keys(int n, int r);

/// Throws BudgetExceeded when q^{n(n-r)} modifications per class exceed the budget.
KovacsSystem build_system(const Field& f, int n, int r, std::uint64_t budget = kDefaultBudget);

using ClassCoeffs = std::vector<std::pair<RankSequence, Rat>>;
using ClassLaurents = std::vector<std::pair<RankSequence, Laurent>>;

/// Exact solution c of A c = rhs, in key order. Throws ArithmeticError if singular.
ClassCoeffs solve_system(const KovacsSystem& sys);
ClassCoeffs solve_unit_coeffs(const Field& f, int n, int r, std::uint64_t budget = kDefaultBudget);

/// Degree window that any interpolated coefficient must lie in.
std::pair<long, long> interpolation_bounds(int n, int r);

/// Fits each class coefficient as a Laurent polynomial in q over the sampled
/// prime powers. Windows of (#samples - 1) consecutive degrees inside the
/// bounds are tried from the top; the first one that also reproduces the
/// held-out sample is kept. Throws ArithmeticError when no window fits.
ClassLaurents interpolate_coeffs(int n, int r, const std::vector<int>& q_samples,
                                 std::uint64_t budget = kDefaultBudget);

struct ClosedFormReport {
  bool identical = false;
  std::size_t terms_compared = 0;
  std::vector<std::string> mismatches;  // capped at a few entries
};

/// Expands the solved class coefficients into k[M_n] and diffs against eta_r.
ClosedFormReport compare_with_closed_form(const Field& f, int n, int r, std::uint64_t budget = kDefaultBudget);

/// Text table: "n = <n>:" followed by "  (Γ): value" lines; each line gets the prefix.
std::string format_listing(int n, const ClassLaurents& coeffs, const std::string& prefix = "");
/// Per-q variant with exact rational values.
std::string format_listing(int n, const ClassCoeffs& coeffs, const std::string& prefix = "");

}  // namespace mmu
