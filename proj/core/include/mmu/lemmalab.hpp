#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mmu/error.hpp"
#include "mmu/exact.hpp"
#include "mmu/matfq.hpp"

namespace mmu {

/// Partial linear map V_j -> V_n, stored as an n x n matrix whose columns
/// j..n-1 are zero.
class PartialMap {
 public:
  /// Throws InvalidArgument if m is not square or a column outside the domain is non-zero.
  PartialMap(Mat m, int domain_dim);

  const Mat& matrix() const { return m_; }
  int n() const { return m_.rows(); }
  int domain_dim() const { return domain_; }
  int rank() const { return mat_rank(m_); }
  /// dim im T^inf, where im T^j = T(im T^{j-1} ∩ dom T).
  int stable_rank() const;
  /// T acts as the identity on im T^inf.
  bool is_semi_idempotent() const;
  /// im T lies inside V_{domain_dim}.
  bool image_in_domain() const;

 private:
  Mat m_;
  int domain_;
};

/// Integer function on ranks 0..n given as a table; missing entries read as 0.
using RankFn = std::vector<long>;

/// diag(I_ell, J_{r_1}(0), ..., J_{r_s}(0)) with lower Jordan blocks.
Mat jordan_matrix(const Field& f, const std::vector<int>& blocks, int ell = 0);

struct ExtensionCounts {
  std::uint64_t nilpotent = 0;
  std::uint64_t non_nilpotent = 0;  // semi-idempotent but not nilpotent
  std::uint64_t expected = 0;       // the common value both should have
};

/// Replaces the last column of diag(J_{r_1}(0), ..., J_{r_s}(0)) in all q^n
/// ways. With same_rank only outcomes of the original rank count; that form
/// needs r_s > 1.
ExtensionCounts count_extensions_jordan(const Field& f, const std::vector<int>& blocks, bool same_rank);

/// Semi-idempotent results of replacing the last column of m, tallied by
/// stable rank. With target_rank, only results of that rank count.
std::map<int, std::uint64_t> last_column_counts(const Mat& m, std::optional<int> target_rank = std::nullopt);

/// e(T, j): semi-idempotent S on V_n with S|_{V_{n-1}} = T, by stable rank.
/// T must have domain of codimension 1.
std::map<int, std::uint64_t> e_counts(const PartialMap& t, std::optional<int> target_rank = std::nullopt);

struct SumCheck {
  Rat value;     // enumerated sum
  Rat expected;  // closed form
  bool holds() const { return value == expected; }
};

/// sum over semi-idempotent extensions S of T to V_n with rank S <= r of
/// mu(srk S) f(rank S); expected 0. T needs domain V_{n-1}, im T outside
/// V_{n-1} and must be semi-idempotent.
SumCheck check_vanishing_sum(const PartialMap& t, int r, const RankFn& f);

/// E_n(f, T) for square semi-idempotent T on V_{n-1} of rank <= r, compared
/// with mu(srk T) q^{rank T} (f(rank T) - f(rank T + 1)), or with
/// mu(srk T) q^{rank T} f(rank T) when rank T = r.
SumCheck check_inner_sum(const Mat& t, int r, const RankFn& f);

/// q^{ell j} sum over semi-idempotent S on V_{n-ell} extending T_r with
/// rank S <= j of mu(srk S) qbinom(n - ell - rank S, j - rank S).
Rat h_ell(int ell, int j, const PartialMap& t_r, std::uint64_t budget = kDefaultBudget);

/// Outcome of one family of brute-force checks.
struct LemmaCheck {
  LemmaCheck() = default;
  LemmaCheck(std::string id_, std::string statement_) : id(std::move(id_)), statement(std::move(statement_)) {}

  std::string id;
  std::string statement;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

/// Jordan-block extension counts for every composition of m <= n, and the
/// stable-rank relations for diag(I_ell, A) with ell + m <= n.
std::vector<LemmaCheck> check_jordan_lemmas(const Field& f, int n);
/// e(T, srk T) = q^{srk T} e(T, srk T + 1) and the rank-refined forms for
/// every T on V_{m-1} inside V_m, m <= n.
std::vector<LemmaCheck> check_corank1_extensions(const Field& f, int n, std::uint64_t budget = kDefaultBudget);
/// Vanishing sums, inner-sum closed forms and h_ell independence for all
/// instances up to n.
std::vector<LemmaCheck> check_semi_idempotent_sums(const Field& f, int n, std::uint64_t budget = kDefaultBudget);

/// Test functions used by the sum checks: indicators of 0..n plus 1, j, j^2.
std::vector<RankFn> rank_test_functions(int n);

}  // namespace mmu
