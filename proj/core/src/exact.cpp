#include "mmu/exact.hpp"

#include <algorithm>
#include <sstream>

#include "mmu/error.hpp"

namespace mmu {

std::string to_string(const Rat& x) { return x.get_str(); }

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw InvalidArgument("empty rational literal");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw InvalidArgument("malformed rational literal '" + s + "'");
  BigInt n(num[0] == '+' ? num.substr(1) : num), d(den);
  if (d == 0) throw InvalidArgument("zero denominator in '" + s + "'");
  Rat out(n, d);
  out.canonicalize();
  return out;
}

Rat rat_pow(const Rat& base, long k) {
  if (k < 0) {
    if (base == 0) throw ArithmeticError("negative power of zero");
    Rat inv = 1 / base;
    return rat_pow(inv, -k);
  }
  Rat out = 1;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(k));
  out.canonicalize();
  return out;
}

BigInt int_pow(long base, unsigned long k) {
  BigInt out;
  BigInt b(base);
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), k);
  return out;
}

// ---------------------------------------------------------------------------
// RatMatrix

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return x == 0; });
}

Rat RatMatrix::trace() const {
  if (rows_ != cols_) throw InvalidArgument("trace of a non-square matrix");
  Rat t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("RatMatrix product: dimension mismatch");
  RatMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) out(i, j) += x * b(k, j);
    }
  return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("RatMatrix sum: shape mismatch");
  RatMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("RatMatrix difference: shape mismatch");
  RatMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& x) const {
  if (x.size() != cols_) throw InvalidArgument("RatMatrix apply: dimension mismatch");
  std::vector<Rat> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * x[j];
  return out;
}

std::vector<std::size_t> rat_rref(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) swap(a(piv, j), a(row, j));
    const Rat inv = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Rat f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (a(row, j) != 0) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rat_rank(RatMatrix a) { return rat_rref(a).size(); }

std::vector<std::vector<Rat>> null_space(RatMatrix a) {
  const auto pivots = rat_rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix rat_inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rat_rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw ArithmeticError("singular matrix");
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

std::vector<Rat> rat_solve(const RatMatrix& a, const std::vector<Rat>& b) {
  if (a.rows() != a.cols() || b.size() != a.rows())
    throw InvalidArgument("rat_solve: need a square system with matching right-hand side");
  const std::size_t n = a.rows();
  RatMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = rat_rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw ArithmeticError("singular matrix");
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

// ---------------------------------------------------------------------------
// SparseRowReducer

SparseRowReducer::Row SparseRowReducer::reduce(Row row) const {
  // Eliminate leading entries one pivot at a time; rows stay sorted.
  std::size_t pos = 0;
  while (pos < row.size()) {
    const auto it = basis_.find(row[pos].first);
    if (it == basis_.end()) {
      ++pos;
      continue;
    }
    const Rat factor = row[pos].second;
    const Row& piv = it->second;
    Row merged;
    merged.reserve(row.size() + piv.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < piv.size()) {
      if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
        merged.push_back(std::move(row[i++]));
      } else if (i == row.size() || piv[j].first < row[i].first) {
        merged.emplace_back(piv[j].first, -factor * piv[j].second);
        ++j;
      } else {
        Rat v = row[i].second - factor * piv[j].second;
        if (v != 0) merged.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    row = std::move(merged);
    // Entries before pos were already free of pivots and are untouched.
  }
  return row;
}

bool SparseRowReducer::add(Row row) {
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  row.erase(std::remove_if(row.begin(), row.end(), [](const auto& e) { return e.second == 0; }), row.end());
  for (const auto& [c, v] : row)
    if (c >= cols_) throw InvalidArgument("SparseRowReducer: column out of range");
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const Rat lead = row.front().second;
  for (auto& e : row) e.second /= lead;
  basis_.emplace(row.front().first, std::move(row));
  return true;
}

// ---------------------------------------------------------------------------
// Laurent

Laurent::Laurent(long min_deg, std::vector<Rat> coeffs) : min_deg_(min_deg), coeffs_(std::move(coeffs)) {
  normalize();
}

Laurent Laurent::monomial(const Rat& c, long deg) { return Laurent(deg, {c}); }

void Laurent::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
  min_deg_ = coeffs_.empty() ? 0 : min_deg_ + static_cast<long>(lead);
}

Rat Laurent::eval(const Rat& q) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc * rat_pow(q, min_deg_);
}

namespace {

// Polynomial sum_i c_i q^i (c_0 first), descending, Sage style.
std::string render_poly(const std::vector<Rat>& c) {
  std::ostringstream os;
  bool first = true;
  for (long d = static_cast<long>(c.size()) - 1; d >= 0; --d) {
    const Rat& v = c[static_cast<std::size_t>(d)];
    if (v == 0) continue;
    const Rat a = abs(v);
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "q";
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

}  // namespace

std::string Laurent::to_string() const {
  if (coeffs_.empty()) return "0";
  if (min_deg_ >= 0) {
    std::vector<Rat> shifted(static_cast<std::size_t>(min_deg_), Rat(0));
    shifted.insert(shifted.end(), coeffs_.begin(), coeffs_.end());
    return render_poly(shifted);
  }
  const long k = -min_deg_;
  const std::string den = k == 1 ? "q" : "q^" + std::to_string(k);
  if (coeffs_.size() == 1) {
    const Rat& c = coeffs_[0];
    if (c.get_den() == 1) return c.get_num().get_str() + "/" + den;
    return c.get_num().get_str() + "/(" + c.get_den().get_str() + "*" + den + ")";
  }
  return "(" + render_poly(coeffs_) + ")/" + den;
}

Laurent laurent_interpolate(const std::vector<std::pair<Rat, Rat>>& samples, long min_deg, long max_deg) {
  if (max_deg < min_deg) throw InvalidArgument("laurent_interpolate: empty degree window");
  const auto width = static_cast<std::size_t>(max_deg - min_deg + 1);
  if (samples.size() < width + 1)
    throw InvalidArgument("laurent_interpolate: need " + std::to_string(width + 1) +
                          " samples (including one held out), got " + std::to_string(samples.size()));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].first == 0) throw InvalidArgument("laurent_interpolate: sample at q = 0");
    for (std::size_t j = 0; j < i; ++j)
      if (samples[i].first == samples[j].first)
        throw InvalidArgument("laurent_interpolate: repeated sample point");
  }
  // Fit w(q) = v(q) q^{-min_deg} as an ordinary polynomial of degree < width.
  RatMatrix vander(width, width);
  std::vector<Rat> rhs(width);
  for (std::size_t i = 0; i < width; ++i) {
    const Rat& q = samples[i].first;
    Rat pw = 1;
    for (std::size_t j = 0; j < width; ++j) {
      vander(i, j) = pw;
      pw *= q;
    }
    rhs[i] = samples[i].second * rat_pow(q, -min_deg);
  }
  Laurent fit(min_deg, rat_solve(vander, rhs));
  for (const auto& [q, v] : samples)
    if (fit.eval(q) != v)
      throw ArithmeticError("laurent_interpolate: inconsistent samples at q = " + q.get_str());
  return fit;
}

}  // namespace mmu
