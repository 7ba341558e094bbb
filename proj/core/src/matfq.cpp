#include "mmu/matfq.hpp"

#include <algorithm>
#include <sstream>

namespace mmu {
namespace {

void check_dims(int rows, int cols) {
  if (rows < 0 || cols < 0 || rows > kMaxDim || cols > kMaxDim)
    throw InvalidArgument("matrix dimensions " + std::to_string(rows) + "x" + std::to_string(cols) +
                          " outside 0.." + std::to_string(kMaxDim));
}

void same_field(const Mat& a, const Mat& b) {
  if (&a.field() != &b.field()) throw InvalidArgument("matrices over different fields");
}

}  // namespace

Mat::Mat(const Field& f, int rows, int cols) : field_(&f), rows_(rows), cols_(cols) {
  check_dims(rows, cols);
}

Mat Mat::from_rows(const Field& f, const std::vector<std::vector<int>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows.front().size()) : 0;
  Mat out(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InvalidArgument("ragged matrix rows");
    for (int j = 0; j < c; ++j) {
      const int v = rows[i][j];
      if (v < 0 || v >= f.q())
        throw InvalidArgument("entry " + std::to_string(v) + " is not an element of F_" + std::to_string(f.q()));
      out(i, j) = static_cast<Elem>(v);
    }
  }
  return out;
}

Mat Mat::identity(const Field& f, int n) {
  Mat out(f, n, n);
  for (int i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

bool Mat::is_zero() const {
  for (int i = 0; i < rows_ * cols_; ++i)
    if (e_[i]) return false;
  return true;
}

std::vector<std::vector<int>> Mat::to_rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(rows_), std::vector<int>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << "[";
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << int((*this)(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

bool operator==(const Mat& a, const Mat& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  return std::equal(a.e_.begin(), a.e_.begin() + a.rows_ * a.cols_, b.e_.begin());
}

std::strong_ordering operator<=>(const Mat& a, const Mat& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  const int cells = a.rows_ * a.cols_;
  for (int i = 0; i < cells; ++i)
    if (auto c = a.e_[i] <=> b.e_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

bool key_fits(int q, int rows, int cols) {
  // Largest key is q^(rows*cols) - 1.
  std::uint64_t total = 1;
  for (int i = 0; i < rows * cols; ++i) {
    if (total > UINT64_MAX / static_cast<std::uint64_t>(q)) {
      // q^k overflowing by exactly one unit still leaves every key representable.
      return i + 1 == rows * cols && total * static_cast<std::uint64_t>(q) - 1 == UINT64_MAX;
    }
    total *= static_cast<std::uint64_t>(q);
  }
  return true;
}

MatKey mat_key(const Mat& a) {
  const int q = a.field().q();
  if (!key_fits(q, a.rows(), a.cols()))
    throw InvalidArgument("matrix key overflow for " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                          " over F_" + std::to_string(q));
  MatKey k = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) k = k * static_cast<MatKey>(q) + a(i, j);
  return k;
}

Mat mat_from_key(const Field& f, int rows, int cols, MatKey key) {
  Mat out(f, rows, cols);
  const auto q = static_cast<MatKey>(f.q());
  for (int idx = rows * cols - 1; idx >= 0; --idx) {
    out(idx / cols, idx % cols) = static_cast<Elem>(key % q);
    key /= q;
  }
  return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  same_field(a, b);
  if (a.cols() != b.rows()) throw InvalidArgument("dimension mismatch in matrix product");
  const Field& f = a.field();
  const auto add = f.add_table();
  const auto mul = f.mul_table();
  const int q = f.q();
  Mat out(f, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Elem aik = a(i, k);
      if (!aik) continue;
      const Elem* mrow = &mul[static_cast<std::size_t>(aik * q)];
      for (int j = 0; j < b.cols(); ++j) {
        Elem& o = out(i, j);
        o = add[static_cast<std::size_t>(o * q + mrow[b(k, j)])];
      }
    }
  }
  return out;
}

Mat mat_add(const Mat& a, const Mat& b) {
  same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("dimension mismatch in matrix sum");
  Mat out(a.field(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a.field().add(a(i, j), b(i, j));
  return out;
}

Mat mat_pow(const Mat& a, int k) {
  if (!a.square()) throw InvalidArgument("power of a non-square matrix");
  if (k < 0) throw InvalidArgument("negative matrix power");
  Mat out = Mat::identity(a.field(), a.rows());
  for (int i = 0; i < k; ++i) out = mat_mul(out, a);
  return out;
}

Mat transpose(const Mat& a) {
  Mat out(a.field(), a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Mat rref(const Mat& a, std::vector<int>* pivots) {
  const Field& f = a.field();
  Mat m = a;
  if (pivots) pivots->clear();
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(piv, j));
    const Elem s = f.inv(m(row, col));
    for (int j = 0; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), s);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || !m(i, col)) continue;
      const Elem c = m(i, col);
      for (int j = 0; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(c, m(row, j)));
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  return m;
}

int mat_rank(const Mat& a) {
  std::vector<int> piv;
  rref(a, &piv);
  return static_cast<int>(piv.size());
}

Mat mat_inverse(const Mat& a) {
  if (!a.square()) throw InvalidArgument("inverse of a non-square matrix");
  const int n = a.rows();
  const Field& f = a.field();
  // Gauss-Jordan on a and the identity side by side.
  Mat m = a, inv = Mat::identity(f, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (m(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) throw ArithmeticError("matrix is singular");
    for (int j = 0; j < n; ++j) {
      std::swap(m(col, j), m(piv, j));
      std::swap(inv(col, j), inv(piv, j));
    }
    const Elem s = f.inv(m(col, col));
    for (int j = 0; j < n; ++j) {
      m(col, j) = f.mul(m(col, j), s);
      inv(col, j) = f.mul(inv(col, j), s);
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || !m(i, col)) continue;
      const Elem c = m(i, col);
      for (int j = 0; j < n; ++j) {
        m(i, j) = f.sub(m(i, j), f.mul(c, m(col, j)));
        inv(i, j) = f.sub(inv(i, j), f.mul(c, inv(col, j)));
      }
    }
  }
  return inv;
}

bool is_invertible(const Mat& a) { return a.square() && mat_rank(a) == a.rows(); }

bool is_semi_idempotent(const Mat& a) {
  if (!a.square()) throw InvalidArgument("semi-idempotency of a non-square matrix");
  const Mat an = mat_pow(a, a.rows());
  return mat_mul(an, a) == an;
}

int stable_rank(const Mat& a) {
  if (!a.square()) throw InvalidArgument("stable rank of a non-square matrix");
  return mat_rank(mat_pow(a, a.rows()));
}

std::string RankSequence::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(values[i]);
  }
  return s + ")";
}

RankSequence rank_sequence(const Mat& a) {
  if (!a.square()) throw InvalidArgument("rank sequence of a non-square matrix");
  RankSequence out;
  Mat p = Mat::identity(a.field(), a.rows());
  for (int k = 0; k <= a.rows(); ++k) {
    out.values.push_back(mat_rank(p));
    p = mat_mul(p, a);
  }
  return out;
}

std::string SemiIdemType::to_string() const {
  return "(" + std::to_string(stable_rank) + ", " + nilpotent.to_string() + ")";
}

SemiIdemType type_of_sequence(const RankSequence& seq) {
  const auto& r = seq.values;
  if (r.empty()) throw InvalidArgument("empty rank sequence");
  const int i = r.back();
  std::vector<int> conj;
  for (std::size_t j = 1; j < r.size(); ++j) {
    const int d = r[j - 1] - r[j];
    if (d < 0) throw InvalidArgument("rank sequence " + seq.to_string() + " is not decreasing");
    if (d > 0) conj.push_back(d);
  }
  Partition lambda_conj(conj);  // validates weak decrease of differences
  return SemiIdemType{i, lambda_conj.conjugate()};
}

RankSequence sequence_of_type(const SemiIdemType& t) {
  // rank A^k = i + sum over parts of max(part - k, 0).
  const int n = t.n();
  RankSequence out;
  for (int k = 0; k <= n; ++k) {
    int r = t.stable_rank;
    for (int p : t.nilpotent.parts()) r += std::max(p - k, 0);
    out.values.push_back(r);
  }
  return out;
}

SemiIdemType semi_idem_type(const Mat& a) {
  if (!is_semi_idempotent(a)) throw InvalidArgument("matrix " + a.to_string() + " is not semi-idempotent");
  return type_of_sequence(rank_sequence(a));
}

std::vector<SemiIdemType> semi_idempotent_types(int n) {
  if (n < 0) throw InvalidArgument("negative dimension");
  std::vector<SemiIdemType> out;
  for (int i = n; i >= 0; --i)
    for (auto& lambda : partitions(n - i)) out.push_back(SemiIdemType{i, std::move(lambda)});
  return out;
}

Mat partial_injective_jordan(const SemiIdemType& t, const Field& f) {
  const int n = t.n();
  if (t.stable_rank < 0) throw InvalidArgument("negative stable rank");
  check_dims(n, n);
  Mat block(f, n, n);
  for (int k = 0; k < t.stable_rank; ++k) block(k, k) = 1;
  int start = t.stable_rank;
  for (int part : t.nilpotent.parts()) {
    for (int k = 0; k + 1 < part; ++k) block(start + k + 1, start + k) = 1;
    start += part;
  }
  // New basis order: non-zero columns first, zero columns last, each in original order.
  std::vector<int> order;
  for (int pass = 0; pass < 2; ++pass)
    for (int j = 0; j < n; ++j) {
      bool nz = false;
      for (int i = 0; i < n; ++i) nz = nz || block(i, j);
      if (nz == (pass == 0)) order.push_back(j);
    }
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) pos[order[k]] = k;
  Mat out(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(pos[i], pos[j]) = block(i, j);
  return out;
}

Mat e_matrix(const Field& f, int n, int r) {
  if (r < 0 || r > n) throw InvalidArgument("e_{n,r} requires 0 <= r <= n");
  Mat out(f, n, n);
  for (int i = 0; i < r; ++i) out(i, i) = 1;
  return out;
}

std::uint64_t checked_count(int q, int rows, int cols, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (int i = 0; i < rows * cols; ++i) {
    if (total > budget / static_cast<std::uint64_t>(q))
      throw BudgetExceeded("enumerating " + std::to_string(rows) + "x" + std::to_string(cols) + " matrices over F_" +
                           std::to_string(q) + " exceeds the budget of " + std::to_string(budget));
    total *= static_cast<std::uint64_t>(q);
  }
  return total;
}

void for_each_matrix(const Field& f, int rows, int cols, const std::function<void(const Mat&)>& fn,
                     std::uint64_t budget) {
  checked_count(f.q(), rows, cols, budget);
  Mat m(f, rows, cols);
  const int cells = rows * cols;
  const auto top = static_cast<Elem>(f.q() - 1);
  while (true) {
    fn(m);
    // Odometer increment, last entry least significant.
    int idx = cells - 1;
    while (idx >= 0 && m(idx / cols, idx % cols) == top) {
      m(idx / cols, idx % cols) = 0;
      --idx;
    }
    if (idx < 0) break;
    ++m(idx / cols, idx % cols);
  }
}

std::vector<Mat> enumerate_matrices(const Field& f, int n, std::uint64_t budget) {
  std::vector<Mat> out;
  out.reserve(checked_count(f.q(), n, n, budget));
  for_each_matrix(f, n, n, [&](const Mat& m) { out.push_back(m); }, budget);
  return out;
}

std::vector<Mat> enumerate_semi_idempotents(const Field& f, int n, int max_rank, std::uint64_t budget) {
  std::vector<Mat> out;
  for_each_matrix(
      f, n, n,
      [&](const Mat& m) {
        if (mat_rank(m) <= max_rank && is_semi_idempotent(m)) out.push_back(m);
      },
      budget);
  return out;
}

std::vector<Mat> enumerate_gl(const Field& f, int n, std::uint64_t budget) {
  std::vector<Mat> out;
  for_each_matrix(
      f, n, n,
      [&](const Mat& m) {
        if (is_invertible(m)) out.push_back(m);
      },
      budget);
  return out;
}

}  // namespace mmu
