#include "mmu/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "mmu/qcomb.hpp"

namespace mmu {
namespace {

void same_context(const AlgElem& a, const AlgElem& b) {
  if (&a.field() != &b.field() || a.n() != b.n()) throw InvalidArgument("algebra elements from different contexts");
}

// Caches mu(srk) * weight(rank) so enumeration loops do no GMP work per matrix.
class RankSrkTable {
 public:
  explicit RankSrkTable(int n) : n_(n), cells_(static_cast<std::size_t>((n + 1) * (n + 1))) {}
  Rat& at(int rank, int srk) { return cells_[static_cast<std::size_t>(rank * (n_ + 1) + srk)]; }

 private:
  int n_;
  std::vector<Rat> cells_;
};

// All d x n matrices A such that F_W A is semi-idempotent; yields T = F_W A.
template <class Fn>
void for_each_semi_idempotent_into(const Subspace& w, std::uint64_t budget, Fn&& fn) {
  const Field& f = w.field();
  const int n = w.n(), d = w.dim();
  const Mat frame = w.frame();
  if (d == 0) {
    fn(Mat(f, n, n));
    return;
  }
  for_each_matrix(
      f, d, n,
      [&](const Mat& a) {
        const Mat t = mat_mul(frame, a);
        if (is_semi_idempotent(t)) fn(t);
      },
      budget);
}

// Semi-idempotent d x d matrices, optionally singular only.
std::vector<Mat> semi_idempotents_of_size(const Field& f, int d, bool singular_only) {
  std::vector<Mat> out;
  if (d == 0) {
    if (!singular_only) out.emplace_back(f, 0, 0);
    return out;
  }
  for_each_matrix(f, d, d, [&](const Mat& t) {
    if (singular_only && mat_rank(t) == d) return;
    if (is_semi_idempotent(t)) out.push_back(t);
  });
  return out;
}

Elem primitive_element(const Field& f) {
  for (int a = 1; a < f.q(); ++a) {
    int order = 1;
    Elem x = static_cast<Elem>(a);
    while (x != 1) {
      x = f.mul(x, static_cast<Elem>(a));
      ++order;
    }
    if (order == f.q() - 1) return static_cast<Elem>(a);
  }
  return 1;
}

}  // namespace

AlgElem::AlgElem(const Field& f, int n) : field_(&f), n_(n) {
  if (n < 0 || n > kMaxDim) throw InvalidArgument("algebra dimension out of range");
  if (!key_fits(f.q(), n, n))
    throw InvalidArgument("k[M_" + std::to_string(n) + "] over F_" + std::to_string(f.q()) + " is too large to key");
}

AlgElem AlgElem::basis(const Mat& m, const Rat& c) {
  if (!m.square()) throw InvalidArgument("monoid elements are square matrices");
  AlgElem out(m.field(), m.rows());
  out.add_term(m, c);
  return out;
}

Rat AlgElem::coeff(const Mat& m) const { return coeff(mat_key(m)); }

Rat AlgElem::coeff(MatKey k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? Rat(0) : it->second;
}

void AlgElem::add_term(const Mat& m, const Rat& c) {
  if (&m.field() != field_ || m.rows() != n_ || m.cols() != n_) throw InvalidArgument("matrix outside k[M_n]");
  add_term(mat_key(m), c);
}

void AlgElem::add_term(MatKey k, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int AlgElem::max_rank() const {
  int r = -1;
  for (const auto& [k, c] : terms_) r = std::max(r, mat_rank(matrix(k)));
  return r;
}

AlgElem alg_add(const AlgElem& a, const AlgElem& b) {
  same_context(a, b);
  AlgElem out = a;
  for (const auto& [k, c] : b.terms()) out.add_term(k, c);
  return out;
}

AlgElem alg_sub(const AlgElem& a, const AlgElem& b) { return alg_add(a, alg_scale(b, -1)); }

AlgElem alg_scale(const AlgElem& a, const Rat& c) {
  AlgElem out(a.field(), a.n());
  if (c == 0) return out;
  for (const auto& [k, v] : a.terms()) out.add_term(k, v * c);
  return out;
}

AlgElem alg_mul(const AlgElem& a, const AlgElem& b, std::uint64_t pair_budget) {
  same_context(a, b);
  const std::uint64_t pairs = static_cast<std::uint64_t>(a.size()) * b.size();
  if (pairs > pair_budget)
    throw BudgetExceeded("product of supports " + std::to_string(a.size()) + " x " + std::to_string(b.size()) +
                         " exceeds the pair budget of " + std::to_string(pair_budget));
  std::vector<Mat> bm;
  bm.reserve(b.size());
  for (const auto& [k, c] : b.terms()) bm.push_back(b.matrix(k));
  std::unordered_map<MatKey, Rat> acc;
  acc.reserve(std::min<std::uint64_t>(pairs, 1 << 20));
  for (const auto& [ka, ca] : a.terms()) {
    const Mat x = a.matrix(ka);
    std::size_t j = 0;
    for (const auto& [kb, cb] : b.terms()) acc[mat_key(mat_mul(x, bm[j++]))] += ca * cb;
  }
  AlgElem out(a.field(), a.n());
  for (const auto& [k, c] : acc) out.add_term(k, c);
  return out;
}

AlgElem conjugate(const AlgElem& a, const Mat& g) {
  const Mat gi = mat_inverse(g);
  AlgElem out(a.field(), a.n());
  for (const auto& [k, c] : a.terms()) out.add_term(mat_mul(mat_mul(gi, a.matrix(k)), g), c);
  return out;
}

AlgElem transpose_antiinvolution(const AlgElem& a) {
  AlgElem out(a.field(), a.n());
  for (const auto& [k, c] : a.terms()) out.add_term(transpose(a.matrix(k)), c);
  return out;
}

AlgElem eta_r(const Field& f, int n, int r, std::uint64_t budget) {
  if (r < 0 || r > n) throw InvalidArgument("eta_r requires 0 <= r <= n");
  if (r == n) return AlgElem::basis(Mat::identity(f, n));
  const long q = f.q();
  RankSrkTable table(n);
  const Rat scale = rat_pow(Rat(q), -static_cast<long>(n - 1) * r) * mu(r, q);
  for (int rk = 0; rk <= r; ++rk)
    for (int s = 0; s <= rk; ++s) table.at(rk, s) = scale * mu(s, q) * Rat(q_binomial(n - 1 - rk, r - rk, q));
  AlgElem out(f, n);
  for_each_matrix(
      f, n, n,
      [&](const Mat& m) {
        const int rk = mat_rank(m);
        if (rk > r || !is_semi_idempotent(m)) return;
        out.add_term(m, table.at(rk, stable_rank(m)));
      },
      budget);
  return out;
}

AlgElem eta_r_alt(const Field& f, int n, int r, std::uint64_t budget) {
  if (r < 0 || r > n) throw InvalidArgument("eta_r_alt requires 0 <= r <= n");
  const long q = f.q();
  RankSrkTable table(n);
  for (int rk = 0; rk <= r; ++rk)
    for (int s = 0; s <= rk; ++s) {
      Rat c = 0;
      for (int j = rk; j <= r; ++j)
        c += rat_pow(Rat(q), -static_cast<long>(n - j) * j) / mu(j, q) * Rat(q_binomial(n - rk, j - rk, q));
      table.at(rk, s) = c * mu(s, q);
    }
  AlgElem out(f, n);
  for_each_matrix(
      f, n, n,
      [&](const Mat& m) {
        const int rk = mat_rank(m);
        if (rk > r || !is_semi_idempotent(m)) return;
        out.add_term(m, table.at(rk, stable_rank(m)));
      },
      budget);
  return out;
}

AlgElem eta_corank1(const Field& f, int n, std::uint64_t budget) {
  if (n < 1) throw InvalidArgument("corank-1 form needs n >= 1");
  const long q = f.q();
  const Rat scale = -1 / mu(n, q);
  AlgElem out(f, n);
  for_each_matrix(
      f, n, n,
      [&](const Mat& m) {
        if (mat_rank(m) == n || !is_semi_idempotent(m)) return;
        out.add_term(m, scale * mu(stable_rank(m), q));
      },
      budget);
  return out;
}

AlgElem eta_W(const Subspace& w, std::uint64_t budget) {
  const Field& f = w.field();
  const long q = f.q();
  const int n = w.n(), d = w.dim();
  const Rat scale = rat_pow(Rat(q), -static_cast<long>(d) * (n - d)) / mu(d, q);
  AlgElem out(f, n);
  for_each_semi_idempotent_into(w, budget, [&](const Mat& t) { out.add_term(t, scale * mu(stable_rank(t), q)); });
  return out;
}

Mat embed_endomorphism(const Subspace& w, const Subspace& u, const Mat& t) {
  if (!w.is_complement(u)) throw InvalidArgument("U is not a complement of W");
  const int n = w.n(), d = w.dim();
  if (t.rows() != d || t.cols() != d) throw InvalidArgument("endomorphism has the wrong size");
  const Field& f = w.field();
  Mat p(f, n, n), block(f, n, n);
  const Mat fw = w.frame(), fu = u.frame();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) p(i, j) = fw(i, j);
    for (int j = 0; j < n - d; ++j) p(i, d + j) = fu(i, j);
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) block(i, j) = t(i, j);
  return mat_mul(mat_mul(p, block), mat_inverse(p));
}

AlgElem epsilon_WU(const Subspace& w, const Subspace& u) {
  if (!w.is_complement(u)) throw InvalidArgument("U is not a complement of W");
  const long q = w.field().q();
  const Rat scale = 1 / mu(w.dim(), q);
  AlgElem out(w.field(), w.n());
  for (const Mat& t : semi_idempotents_of_size(w.field(), w.dim(), false))
    out.add_term(embed_endomorphism(w, u, t), scale * mu(w.dim() ? stable_rank(t) : 0, q));
  return out;
}

AlgElem epsilon_star_WU(const Subspace& w, const Subspace& u) {
  if (!w.is_complement(u)) throw InvalidArgument("U is not a complement of W");
  const long q = w.field().q();
  const Rat scale = -1 / mu(w.dim(), q);
  AlgElem out(w.field(), w.n());
  for (const Mat& t : semi_idempotents_of_size(w.field(), w.dim(), true))
    out.add_term(embed_endomorphism(w, u, t), scale * mu(stable_rank(t), q));
  return out;
}

AlgElem E_prime_W(const Subspace& w, std::uint64_t budget) {
  AlgElem out(w.field(), w.n());
  for (int d = 0; d <= w.dim(); ++d)
    for (const Subspace& sub : enumerate_subspaces(w.field(), w.n(), d))
      if (w.contains(sub)) out = alg_add(out, eta_W(sub, budget));
  return out;
}

AlgElem E_prime_W_direct(const Subspace& w, std::uint64_t budget) {
  const long q = w.field().q();
  const Rat scale = 1 / mu(w.dim(), q);
  AlgElem out(w.field(), w.n());
  for_each_semi_idempotent_into(w, budget, [&](const Mat& t) {
    if (mat_rank(t) == w.dim()) out.add_term(t, scale * mu(stable_rank(t), q));
  });
  return out;
}

std::vector<Mat> gl_generators(const Field& f, int n) {
  std::vector<Mat> gens;
  if (n == 0) return gens;
  Mat d = Mat::identity(f, n);
  d(0, 0) = primitive_element(f);
  gens.push_back(d);
  if (n >= 2) {
    Mat swap = Mat::identity(f, n);
    swap(0, 0) = swap(1, 1) = 0;
    swap(0, 1) = swap(1, 0) = 1;
    Mat cycle(f, n, n);
    for (int i = 0; i < n; ++i) cycle((i + 1) % n, i) = 1;
    Mat transvection = Mat::identity(f, n);
    transvection(0, 1) = 1;
    gens.push_back(swap);
    gens.push_back(cycle);
    gens.push_back(transvection);
  }
  return gens;
}

std::vector<Mat> conjugation_test_set(const Field& f, int n, bool* full_group) {
  const bool full = gl_order(n, f.q()) <= kKuhnFullGroupLimit;
  if (full_group) *full_group = full;
  return full ? enumerate_gl(f, n) : gl_generators(f, n);
}

KuhnReport kuhn_check(const AlgElem& u, int r) {
  KuhnReport rep;
  const auto group = conjugation_test_set(u.field(), u.n(), &rep.full_group);
  rep.group_elements = group.size();
  rep.conjugation_invariant = true;
  for (const Mat& g : group) {
    if (conjugate(u, g) != u) {
      rep.conjugation_invariant = false;
      rep.detail = "not invariant under conjugation by " + g.to_string();
      break;
    }
  }
  const AlgElem e = AlgElem::basis(e_matrix(u.field(), u.n(), r));
  rep.fixes_e = alg_mul(u, e) == e;
  if (!rep.fixes_e && rep.detail.empty()) rep.detail = "u [e_{n,r}] != [e_{n,r}]";
  rep.passed = rep.conjugation_invariant && rep.fixes_e;
  return rep;
}

namespace {

// u scaled to integers: coefficient_i = num_i / den.
struct ScaledElem {
  std::vector<Mat> mats;
  std::vector<std::int64_t> num;
  std::int64_t den = 1;
};

std::optional<ScaledElem> scale_to_integers(const AlgElem& u) {
  BigInt den = 1;
  for (const auto& [k, c] : u.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ScaledElem out;
  // Sums of |supp| terms must stay far from overflow.
  const BigInt limit = BigInt(std::numeric_limits<std::int64_t>::max() / 4) / BigInt(std::max<std::size_t>(u.size(), 1));
  if (den > limit) return std::nullopt;
  out.den = den.get_si();
  for (const auto& [k, c] : u.terms()) {
    const BigInt v = c.get_num() * (den / c.get_den());
    if (abs(v) > limit) return std::nullopt;
    out.mats.push_back(u.matrix(k));
    out.num.push_back(v.get_si());
  }
  return out;
}

// True iff sum_i num_i [prod(m, mats_i)] == den [m].
template <class Prod>
bool acts_as_identity(const ScaledElem& s, const Mat& m, Prod prod, std::unordered_map<MatKey, std::int64_t>& acc) {
  acc.clear();
  for (std::size_t i = 0; i < s.mats.size(); ++i) acc[mat_key(prod(m, s.mats[i]))] += s.num[i];
  const MatKey km = mat_key(m);
  for (const auto& [k, v] : acc)
    if (v != (k == km ? s.den : 0)) return false;
  return acc.count(km) == 1;
}

bool acts_as_identity_exact(const AlgElem& u, const Mat& m) {
  const AlgElem bm = AlgElem::basis(m);
  return alg_mul(u, bm, std::numeric_limits<std::uint64_t>::max()) == bm &&
         alg_mul(bm, u, std::numeric_limits<std::uint64_t>::max()) == bm;
}

}  // namespace

UnitReport verify_unit(const AlgElem& u, int r, const VerifyOptions& opts) {
  UnitReport rep;
  const Field& f = u.field();
  const int n = u.n();
  if (r < 0 || r > n) throw InvalidArgument("rank bound out of range");

  std::vector<Mat> tests;
  bool enumerable = true;
  try {
    checked_count(f.q(), n, n, opts.budget);
  } catch (const BudgetExceeded&) {
    enumerable = false;
  }
  if (enumerable) {
    for_each_matrix(
        f, n, n,
        [&](const Mat& m) {
          if (mat_rank(m) <= r) tests.push_back(m);
        },
        opts.budget);
  }
  const std::uint64_t pairs = 2 * static_cast<std::uint64_t>(u.size()) * tests.size();
  if (!enumerable || pairs > opts.pair_budget) {
    const KuhnReport k = kuhn_check(u, r);
    rep.fallback = true;
    rep.passed = k.passed;
    rep.detail = std::string("exhaustive check over budget; Kuhn criterion over ") +
                 (k.full_group ? "all of GL_n" : "generators of GL_n") + (k.passed ? " passed" : ": " + k.detail);
    return rep;
  }

  const auto scaled = scale_to_integers(u);
  const unsigned jobs = std::max(1u, opts.jobs);
  std::atomic<std::size_t> first_fail{tests.size()};
  auto worker = [&](unsigned id) {
    std::unordered_map<MatKey, std::int64_t> acc;
    acc.reserve(u.size() * 2 + 1);
    for (std::size_t i = id; i < tests.size(); i += jobs) {
      if (i > first_fail.load()) break;
      const Mat& m = tests[i];
      bool ok;
      if (scaled) {
        ok = acts_as_identity(*scaled, m, [](const Mat& a, const Mat& x) { return mat_mul(x, a); }, acc) &&
             acts_as_identity(*scaled, m, [](const Mat& a, const Mat& x) { return mat_mul(a, x); }, acc);
      } else {
        ok = acts_as_identity_exact(u, m);
      }
      if (!ok) {
        std::size_t cur = first_fail.load();
        while (i < cur && !first_fail.compare_exchange_weak(cur, i)) {
        }
        break;
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }

  rep.exhaustive = true;
  rep.matrices_checked = tests.size();
  rep.passed = first_fail.load() == tests.size();
  if (!rep.passed) {
    rep.counterexample = tests[first_fail.load()];
    rep.detail = "fails on " + rep.counterexample->to_string();
  } else {
    rep.detail = "u[m] = [m] = [m]u for all " + std::to_string(tests.size()) + " matrices of rank <= " + std::to_string(r);
  }
  return rep;
}

std::string to_string(const AlgElem& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c) << "*" << a.matrix(k).to_string();
  }
  return os.str();
}

}  // namespace mmu
