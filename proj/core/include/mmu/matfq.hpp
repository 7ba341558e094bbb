#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mmu/error.hpp"
#include "mmu/fq.hpp"
#include "mmu/qcomb.hpp"

namespace mmu {

/// Largest matrix side supported by Mat.
inline constexpr int kMaxDim = 8;

/// Dense matrix over F_q with at most kMaxDim rows and columns.
class Mat {
 public:
  Mat() = default;
  Mat(const Field& f, int rows, int cols);
  /// Builds from rows of field indices; throws InvalidArgument on ragged rows or out-of-range entries.
  static Mat from_rows(const Field& f, const std::vector<std::vector<int>>& rows);
  static Mat identity(const Field& f, int n);
  static Mat zero(const Field& f, int rows, int cols) { return Mat(f, rows, cols); }

  const Field& field() const { return *field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Elem operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * cols_ + j)]; }
  Elem& operator()(int i, int j) { return e_[static_cast<std::size_t>(i * cols_ + j)]; }

  bool is_zero() const;
  std::vector<std::vector<int>> to_rows() const;
  std::string to_string() const;

  friend bool operator==(const Mat& a, const Mat& b);
  /// Shape first, then row-major entries; fields are not compared.
  friend std::strong_ordering operator<=>(const Mat& a, const Mat& b);

 private:
  const Field* field_ = nullptr;
  int rows_ = 0;
  int cols_ = 0;
  std::array<Elem, kMaxDim * kMaxDim> e_{};
};

/// Canonical key: row-major entries read as base-q digits, first entry most
/// significant. Numeric order equals lexicographic order of the entry bytes.
using MatKey = std::uint64_t;

/// True when every rows x cols matrix over F_q has a MatKey.
bool key_fits(int q, int rows, int cols);
/// Throws InvalidArgument when !key_fits.
MatKey mat_key(const Mat& a);
Mat mat_from_key(const Field& f, int rows, int cols, MatKey key);

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_pow(const Mat& a, int k);
Mat transpose(const Mat& a);
int mat_rank(const Mat& a);
/// Reduced row echelon form; pivots receives the pivot columns when non-null.
Mat rref(const Mat& a, std::vector<int>* pivots = nullptr);
/// Throws ArithmeticError for singular input.
Mat mat_inverse(const Mat& a);
bool is_invertible(const Mat& a);

bool is_semi_idempotent(const Mat& a);
int stable_rank(const Mat& a);

/// (rank a^0, rank a^1, ..., rank a^n); ordered lexicographically.
struct RankSequence {
  std::vector<int> values;

  /// Renders as "(2, 1, 0)".
  std::string to_string() const;
  friend auto operator<=>(const RankSequence&, const RankSequence&) = default;
  friend bool operator==(const RankSequence&, const RankSequence&) = default;
};

RankSequence rank_sequence(const Mat& a);

/// Conjugacy class of a semi-idempotent: identity block size plus nilpotent Jordan type.
struct SemiIdemType {
  int stable_rank = 0;
  Partition nilpotent;

  int n() const { return stable_rank + nilpotent.size(); }
  std::string to_string() const;
  friend auto operator<=>(const SemiIdemType&, const SemiIdemType&) = default;
  friend bool operator==(const SemiIdemType&, const SemiIdemType&) = default;
};

/// Throws InvalidArgument when a is not semi-idempotent.
SemiIdemType semi_idem_type(const Mat& a);
/// Type determined by a rank sequence of a semi-idempotent.
SemiIdemType type_of_sequence(const RankSequence& seq);
/// Rank sequence of any matrix of the given type.
RankSequence sequence_of_type(const SemiIdemType& t);
/// All types with i + |lambda| = n, i descending, lambda in partitions() order.
std::vector<SemiIdemType> semi_idempotent_types(int n);

/// Representative of type t: diag(I_i, J_lambda(0)) with J sending e_k to
/// e_{k+1} inside each block, then conjugated by the permutation that lists
/// the basis vectors with non-zero column first. The first rank columns are
/// non-zero and the remaining ones are zero.
Mat partial_injective_jordan(const SemiIdemType& t, const Field& f);

/// e_{n,r} = diag(I_r, 0).
Mat e_matrix(const Field& f, int n, int r);

/// Number of rows x cols matrices, or throws BudgetExceeded above budget.
std::uint64_t checked_count(int q, int rows, int cols, std::uint64_t budget);

/// Visits every rows x cols matrix in key order.
void for_each_matrix(const Field& f, int rows, int cols, const std::function<void(const Mat&)>& fn,
                     std::uint64_t budget = kDefaultBudget);
std::vector<Mat> enumerate_matrices(const Field& f, int n, std::uint64_t budget = kDefaultBudget);
/// Semi-idempotent n x n matrices of rank <= max_rank, in key order.
std::vector<Mat> enumerate_semi_idempotents(const Field& f, int n, int max_rank,
                                            std::uint64_t budget = kDefaultBudget);
/// Elements of GL_n in key order.
std::vector<Mat> enumerate_gl(const Field& f, int n, std::uint64_t budget = kDefaultBudget);

}  // namespace mmu
