#include "mmu/fq.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

#include "mmu/error.hpp"

namespace mmu {
namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Coefficient vectors are little-endian over F_p.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  const int dm = static_cast<int>(m.size()) - 1;
  // m is monic up to the leading coefficient being invertible mod p.
  int lead_inv = 1;
  while ((lead_inv * m.back()) % p != 1) ++lead_inv;
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    const int c = (a[i] * lead_inv) % p;
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j)
      a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p) % p;
  }
  a.resize(static_cast<std::size_t>(dm));
  return a;
}

std::vector<int> digits(int index, int p, int e) {
  std::vector<int> out(static_cast<std::size_t>(e));
  for (int k = 0; k < e; ++k) {
    out[k] = index % p;
    index /= p;
  }
  return out;
}

int undigits(const std::vector<int>& d, int p) {
  int out = 0;
  for (int k = static_cast<int>(d.size()) - 1; k >= 0; --k) out = out * p + d[k];
  return out;
}

}  // namespace

std::pair<int, int> prime_power_decomposition(int q) {
  if (q < 2) return {0, 0};
  int p = 2;
  while (q % p != 0) ++p;
  if (!is_prime(p)) return {0, 0};
  int e = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return {0, 0};
  return {p, e};
}

std::vector<int> builtin_modulus(int q) {
  switch (q) {
    case 4: return {1, 1, 1};           // x^2 + x + 1
    case 8: return {1, 1, 0, 1};        // x^3 + x + 1
    case 9: return {1, 0, 1};           // x^2 + 1
    case 16: return {1, 1, 0, 0, 1};    // x^4 + x + 1
    case 25: return {2, 0, 1};          // x^2 + 2
    case 27: return {1, 2, 0, 1};       // x^3 + 2x + 1
    case 32: return {1, 0, 1, 0, 0, 1}; // x^5 + x^2 + 1
    case 49: return {1, 0, 1};          // x^2 + 1
    default: break;
  }
  throw InvalidArgument("no built-in modulus for q = " + std::to_string(q));
}

bool is_irreducible(const std::vector<int>& poly, int p) {
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1 || poly.back() % p == 0) return false;
  if (deg == 1) return true;
  if (deg <= 3) {
    for (int x = 0; x < p; ++x) {
      long long v = 0;
      for (int k = deg; k >= 0; --k) v = (v * x + poly[k]) % p;
      if (v == 0) return false;
    }
    return true;
  }
  // Brute-force search for a monic factor of degree 1..deg/2.
  for (int d = 1; d <= deg / 2; ++d) {
    int count = 1;
    for (int k = 0; k < d; ++k) count *= p;
    for (int idx = 0; idx < count; ++idx) {
      std::vector<int> f = digits(idx, p, d);
      f.push_back(1);
      std::vector<int> rem = poly_mod(poly, f, p);
      bool zero = true;
      for (int c : rem) zero = zero && (c == 0);
      if (zero) return false;
    }
  }
  return true;
}

Field::Field(int q, int p, int e, std::vector<int> modulus)
    : q_(q), p_(p), e_(e), modulus_(std::move(modulus)) {
  const auto qq = static_cast<std::size_t>(q);
  add_.resize(qq * qq);
  mul_.resize(qq * qq);
  neg_.resize(qq);
  inv_.assign(qq, 0);
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, p, e);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, p, e);
      std::vector<int> s(static_cast<std::size_t>(e));
      for (int k = 0; k < e; ++k) s[k] = (da[k] + db[k]) % p;
      add_[a * q + b] = static_cast<Elem>(undigits(s, p));
      if (e == 1) {
        mul_[a * q + b] = static_cast<Elem>((a * b) % p);
      } else {
        std::vector<int> prod(static_cast<std::size_t>(2 * e - 1), 0);
        for (int i = 0; i < e; ++i)
          for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        mul_[a * q + b] = static_cast<Elem>(undigits(poly_mod(prod, modulus_, p), p));
      }
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (add_[a * q + b] == 0) neg_[a] = static_cast<Elem>(b);
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<Elem>(b);
    }
  }
  verify_axioms();
}

void Field::verify_axioms() const {
  auto fail = [this](const char* what) {
    throw InvalidArgument("field tables for q = " + std::to_string(q_) + " violate " + what);
  };
  for (int a = 0; a < q_; ++a) {
    if (add(static_cast<Elem>(a), 0) != a || mul(static_cast<Elem>(a), 1) != a) fail("identities");
    if (a != 0 && mul(static_cast<Elem>(a), inv_[a]) != 1) fail("inverses");
    for (int b = 0; b < q_; ++b) {
      const auto ea = static_cast<Elem>(a), eb = static_cast<Elem>(b);
      if (add(ea, eb) != add(eb, ea) || mul(ea, eb) != mul(eb, ea)) fail("commutativity");
      for (int c = 0; c < q_; ++c) {
        const auto ec = static_cast<Elem>(c);
        if (add(add(ea, eb), ec) != add(ea, add(eb, ec))) fail("additive associativity");
        if (mul(mul(ea, eb), ec) != mul(ea, mul(eb, ec))) fail("multiplicative associativity");
        if (mul(ea, add(eb, ec)) != add(mul(ea, eb), mul(ea, ec))) fail("distributivity");
      }
    }
  }
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw ArithmeticError("inverse of zero in F_" + std::to_string(q_));
  return inv_[a];
}

Elem Field::pow(Elem a, unsigned k) const {
  Elem out = 1;
  for (unsigned i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (e_ > 1) {
    os << " = F_" << p_ << "[x]/(";
    bool first = true;
    for (int k = static_cast<int>(modulus_.size()) - 1; k >= 0; --k) {
      if (modulus_[k] == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (modulus_[k] != 1 || k == 0) os << modulus_[k];
      if (k >= 1) os << "x";
      if (k >= 2) os << "^" << k;
    }
    os << ")";
  }
  return os.str();
}

const Field& Field::get(int q) {
  const auto [p, e] = prime_power_decomposition(q);
  if (p == 0) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  if (e == 1) return get(q, {});
  return get(q, builtin_modulus(q));
}

const Field& Field::get(int q, const std::vector<int>& modulus) {
  static std::mutex mutex;
  static std::map<std::pair<int, std::vector<int>>, std::unique_ptr<Field>> interned;

  const auto [p, e] = prime_power_decomposition(q);
  if (p == 0) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  if (q > kMaxFieldOrder)
    throw InvalidArgument("unsupported field size q = " + std::to_string(q) +
                          " (max " + std::to_string(kMaxFieldOrder) + ")");
  std::vector<int> mod;
  if (e > 1) {
    if (static_cast<int>(modulus.size()) != e + 1)
      throw InvalidArgument("modulus for q = " + std::to_string(q) + " must have degree " +
                            std::to_string(e));
    for (int c : modulus) mod.push_back(((c % p) + p) % p);
    if (mod.back() != 1) throw InvalidArgument("modulus must be monic");
    if (!is_irreducible(mod, p)) throw InvalidArgument("modulus is reducible over F_p");
  } else if (!modulus.empty() && modulus.size() != 2) {
    throw InvalidArgument("prime fields take no modulus");
  }

  std::lock_guard lock(mutex);
  auto key = std::make_pair(q, mod);
  auto it = interned.find(key);
  if (it == interned.end()) {
    std::unique_ptr<Field> f(new Field(q, p, e, mod));
    it = interned.emplace(std::move(key), std::move(f)).first;
  }
  return *it->second;
}

}  // namespace mmu
