#include "mmu/qcomb.hpp"

#include <algorithm>
#include <functional>

#include "mmu/error.hpp"

namespace mmu {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (parts_.empty()) return Partition();
  for (int c = 1; c <= parts_.front(); ++c) {
    int len = 0;
    for (int p : parts_)
      if (p >= c) ++len;
    out.push_back(len);
  }
  return Partition(std::move(out));
}

bool Partition::contained_in(const Partition& other) const {
  if (length() > other.length()) return false;
  for (int i = 0; i < length(); ++i)
    if (part(i) > other.part(i)) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions(int n) {
  if (n < 0) throw InvalidArgument("partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

long partition_count(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) p[s] += p[s - part];
  return p[n];
}

bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
  if (!mu.contained_in(lambda)) return false;
  // Interlacing: lambda_{i+1} <= mu_i for all i.
  for (int i = 0; i + 1 < lambda.length(); ++i)
    if (lambda.part(i + 1) > mu.part(i)) return false;
  return true;
}

bool is_vertical_strip(const Partition& lambda, const Partition& mu) {
  if (!mu.contained_in(lambda)) return false;
  for (int i = 0; i < lambda.length(); ++i)
    if (lambda.part(i) - mu.part(i) > 1) return false;
  return true;
}

BigInt q_integer(int n, long q) {
  BigInt s = 0, pw = 1;
  for (int i = 0; i < n; ++i) {
    s += pw;
    pw *= q;
  }
  return s;
}

BigInt q_binomial(int n, int m, long q) {
  if (m < 0 || n < 0 || m > n) return 0;
  // Product formula prod_{i<m} (q^{n-i} - 1)/(q^{i+1} - 1); each prefix is integral.
  BigInt num = 1, den = 1;
  for (int i = 0; i < m; ++i) {
    num *= int_pow(q, static_cast<unsigned long>(n - i)) - 1;
    den *= int_pow(q, static_cast<unsigned long>(i + 1)) - 1;
  }
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

Rat mu(int n, long q) {
  if (n < 0) throw InvalidArgument("mu of a negative integer");
  Rat v(int_pow(q, static_cast<unsigned long>(n) * static_cast<unsigned long>(n - (n > 0 ? 1 : 0)) / 2));
  return n % 2 ? Rat(-v) : v;
}

BigInt gl_order(int r, long q) {
  if (r < 0) throw InvalidArgument("negative matrix size");
  BigInt out = 1;
  const BigInt qr = int_pow(q, static_cast<unsigned long>(r));
  for (int i = 0; i < r; ++i) out *= qr - int_pow(q, static_cast<unsigned long>(i));
  return out;
}

Rat sum_identity_lhs(int t, int r, long q) {
  if (t < 1 || t > r) throw InvalidArgument("sum identity requires 1 <= t <= r");
  Rat s = 0;
  for (int j = t; j <= r; ++j)
    s += mu(j, q) * rat_pow(Rat(q), -static_cast<long>(r - 1) * j) * Rat(q_binomial(r - t, j - t, q));
  return s;
}

bool sum_identity_check(int t, int r, long q) {
  const Rat rhs = (t == r) ? Rat(1 / mu(r, q)) : Rat(0);
  return sum_identity_lhs(t, r, q) == rhs;
}

void PartitionFn::set(const Partition& lambda, const Rat& value) {
  if (lambda.size() > bound_)
    throw InvalidArgument("partition " + lambda.to_string() + " exceeds bound " + std::to_string(bound_));
  if (value == 0)
    values_.erase(lambda);
  else
    values_[lambda] = value;
}

Rat PartitionFn::operator()(const Partition& lambda) const {
  const auto it = values_.find(lambda);
  return it == values_.end() ? Rat(0) : it->second;
}

namespace {

template <class Pred>
PartitionFn strip_operator(const PartitionFn& phi, Pred in_strip, bool signed_sum) {
  PartitionFn out(phi.bound());
  for (int size = 0; size <= phi.bound(); ++size) {
    for (const auto& lambda : partitions(size)) {
      Rat acc = 0;
      for (const auto& [mu_p, v] : phi.support()) {
        if (mu_p.size() > size || !in_strip(lambda, mu_p)) continue;
        if (signed_sum && (size - mu_p.size()) % 2)
          acc -= v;
        else
          acc += v;
      }
      out.set(lambda, acc);
    }
  }
  return out;
}

}  // namespace

PartitionFn op_A(const PartitionFn& phi) { return strip_operator(phi, is_horizontal_strip, false); }

PartitionFn op_B(const PartitionFn& phi) { return strip_operator(phi, is_vertical_strip, true); }

}  // namespace mmu
