#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "mmu/exact.hpp"

namespace mmu {

/// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based), zero beyond the length.
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  Partition conjugate() const;
  /// Young-diagram containment: this ⊆ other.
  bool contained_in(const Partition& other) const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n, lexicographically descending: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions(int n);
/// Number of partitions of n.
long partition_count(int n);

/// mu ⊆ lambda and lambda/mu has at most one box per column.
bool is_horizontal_strip(const Partition& lambda, const Partition& mu);
/// mu ⊆ lambda and lambda/mu has at most one box per row.
bool is_vertical_strip(const Partition& lambda, const Partition& mu);

/// [n]_q = 1 + q + ... + q^{n-1}.
BigInt q_integer(int n, long q);
/// Gaussian binomial evaluated at integer q; 0 when m < 0 or m > n.
BigInt q_binomial(int n, int m, long q);
/// (-1)^n q^{n(n-1)/2}.
Rat mu(int n, long q);
/// |GL_r(F_q)| = prod_{i<r} (q^r - q^i).
BigInt gl_order(int r, long q);

/// Checks sum_{j=t}^{r} mu(j) q^{-(r-1)j} [r-t choose j-t]_q == delta_{r,t} / mu(r).
bool sum_identity_check(int t, int r, long q);
/// Left-hand side of the sum identity, exposed for reports.
Rat sum_identity_lhs(int t, int r, long q);

/// Finitely supported rational function on partitions of size <= bound.
class PartitionFn {
 public:
  explicit PartitionFn(int bound) : bound_(bound) {}

  int bound() const { return bound_; }
  /// Throws InvalidArgument when |lambda| exceeds the bound.
  void set(const Partition& lambda, const Rat& value);
  Rat operator()(const Partition& lambda) const;
  const std::map<Partition, Rat>& support() const { return values_; }

  friend bool operator==(const PartitionFn&, const PartitionFn&) = default;

 private:
  int bound_;
  std::map<Partition, Rat> values_;  // no explicit zeros
};

/// (A phi)(lambda) = sum over horizontal strips lambda/mu of phi(mu), truncated to phi's bound.
PartitionFn op_A(const PartitionFn& phi);
/// (B phi)(lambda) = sum over vertical strips of (-1)^{|lambda|-|mu|} phi(mu).
PartitionFn op_B(const PartitionFn& phi);

}  // namespace mmu
