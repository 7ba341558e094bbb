#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mmu {

/// Arbitrary-precision rational, always kept canonical (den > 0, reduced).
using Rat = mpq_class;
using BigInt = mpz_class;

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rat& x);
/// Parses "num/den" or "num"; throws InvalidArgument on malformed input.
Rat parse_rat(const std::string& s);

/// q^k for a possibly negative exponent.
Rat rat_pow(const Rat& base, long k);
BigInt int_pow(long base, unsigned long k);

/// Dense row-major matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  Rat trace() const;
  RatMatrix transpose() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

  std::vector<Rat> apply(const std::vector<Rat>& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rat_rref(RatMatrix& a);
std::size_t rat_rank(RatMatrix a);
/// Basis of {x : A x = 0}.
std::vector<std::vector<Rat>> null_space(RatMatrix a);
/// Throws ArithmeticError when A is singular.
RatMatrix rat_inverse(const RatMatrix& a);
/// Solves A x = b for square non-singular A; throws ArithmeticError otherwise.
std::vector<Rat> rat_solve(const RatMatrix& a, const std::vector<Rat>& b);

/// Incremental exact rank of a stream of sparse rows.
///
/// Keeps an echelon basis of the rows seen so far; each add() reduces the
/// new row against it and reports whether the row was independent.
class SparseRowReducer {
 public:
  using Row = std::vector<std::pair<std::size_t, Rat>>;  // sorted by column

  explicit SparseRowReducer(std::size_t cols) : cols_(cols) {}

  bool add(Row row);
  /// Reduces a row against the basis without inserting it.
  Row reduce(Row row) const;
  std::size_t rank() const { return basis_.size(); }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t cols_;
  std::map<std::size_t, Row> basis_;  // pivot column -> row with pivot coefficient 1
};

/// Laurent polynomial in q with rational coefficients.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long min_deg, std::vector<Rat> coeffs);
  static Laurent monomial(const Rat& c, long deg);

  long min_deg() const { return min_deg_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long max_deg() const { return min_deg_ + static_cast<long>(coeffs_.size()) - 1; }

  Rat eval(const Rat& q) const;

  /// Sage-style rendering: "1", "-1/q", "1/q^3", "q^2 - 1", "(q - 1)/q^2".
  std::string to_string() const;

  friend bool operator==(const Laurent&, const Laurent&) = default;

 private:
  void normalize();

  long min_deg_ = 0;
  std::vector<Rat> coeffs_;
};

/// Fits v(q) = sum_{d=min_deg}^{max_deg} c_d q^d exactly through the first
/// (max_deg - min_deg + 1) samples and checks every remaining sample.
/// Throws InvalidArgument when there are too few samples (including at least
/// one held-out point) and ArithmeticError when a held-out sample disagrees.
Laurent laurent_interpolate(const std::vector<std::pair<Rat, Rat>>& samples, long min_deg,
                            long max_deg);

}  // namespace mmu
