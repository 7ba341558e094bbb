#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mmu {

/// A field element, stored as its dense index 0..q-1.
using Elem = std::uint8_t;

/// Largest field order accepted by Field::get.
inline constexpr int kMaxFieldOrder = 49;

/// Table-driven finite field F_q.
///
/// Index 0 is zero and index 1 is one. For q = p^e with e > 1 the element
/// with coefficient vector (c_0, ..., c_{e-1}) modulo the defining polynomial
/// has index c_0 + c_1 p + ... + c_{e-1} p^{e-1}.
///
/// Instances are interned: references returned by get() stay valid for the
/// lifetime of the program and may be compared by address.
class Field {
 public:
  /// Interned field of order q using the built-in modulus when q is not prime.
  static const Field& get(int q);
  /// Interned field F_p[x]/(modulus); modulus is monic, constant term first.
  static const Field& get(int q, const std::vector<int>& modulus);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  int q() const { return q_; }
  int p() const { return p_; }
  int degree() const { return e_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  /// Throws ArithmeticError for a == 0.
  Elem inv(Elem a) const;
  Elem pow(Elem a, unsigned k) const;

  /// Raw tables, row-major q x q (inverse table has inv[0] = 0).
  std::span<const Elem> add_table() const { return add_; }
  std::span<const Elem> mul_table() const { return mul_; }
  std::span<const Elem> inv_table() const { return inv_; }

  std::string describe() const;

 private:
  Field(int q, int p, int e, std::vector<int> modulus);
  void verify_axioms() const;

  int q_;
  int p_;
  int e_;
  std::vector<int> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
};

/// Returns (p, e) with q = p^e, or (0, 0) when q is not a prime power.
std::pair<int, int> prime_power_decomposition(int q);

/// Built-in irreducible modulus for q = p^e, e > 1 (constant term first).
std::vector<int> builtin_modulus(int q);

/// True iff the monic polynomial (constant term first) is irreducible over F_p.
bool is_irreducible(const std::vector<int>& poly, int p);

}  // namespace mmu
