#include "mmu/lemmalab.hpp"

#include <functional>

#include "mmu/qcomb.hpp"
#include "mmu/subspace.hpp"

namespace mmu {

namespace {

Subspace coordinate_subspace(const Field& f, int n, int j) {
  if (j == 0) return Subspace::zero(f, n);
  Mat rows(f, j, n);
  for (int i = 0; i < j; ++i) rows(i, i) = 1;
  return Subspace::span_of_rows(rows);
}

// im T^inf as a subspace.
Subspace stable_image(const Mat& m, int domain) {
  const Subspace w = coordinate_subspace(m.field(), m.rows(), domain);
  Subspace cur = Subspace::whole(m.field(), m.rows());
  while (true) {
    Subspace next = image_of(m, cur.intersect(w));
    if (next.dim() == cur.dim()) return next;
    cur = std::move(next);
  }
}

long eval(const RankFn& f, int k) { return k < static_cast<int>(f.size()) ? f[static_cast<std::size_t>(k)] : 0; }

bool is_nilpotent(const Mat& m) { return mat_pow(m, m.rows()).is_zero(); }

std::uint64_t upow(int q, int k) {
  std::uint64_t out = 1;
  for (int i = 0; i < k; ++i) out *= static_cast<std::uint64_t>(q);
  return out;
}

std::uint64_t at(const std::map<int, std::uint64_t>& m, int k) {
  const auto it = m.find(k);
  return it == m.end() ? 0 : it->second;
}

// Visits every replacement of the last column of m.
template <class Fn>
void for_each_last_column(const Mat& m, Fn&& fn) {
  const int n = m.rows();
  for_each_matrix(m.field(), n, 1, [&](const Mat& col) {
    Mat s = m;
    for (int i = 0; i < n; ++i) s(i, n - 1) = col(i, 0);
    fn(s);
  });
}

void compositions(int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = 1; k <= n; ++k) {
    cur.push_back(k);
    compositions(n - k, cur, out);
    cur.pop_back();
  }
}

std::string blocks_string(const std::vector<int>& blocks) {
  std::string s = "(";
  for (std::size_t i = 0; i < blocks.size(); ++i) s += (i ? ", " : "") + std::to_string(blocks[i]);
  return s + ")";
}

void record(LemmaCheck& c, bool ok, const std::function<std::string()>& describe) {
  ++c.instances;
  if (ok) return;
  if (c.failures++ == 0) c.first_failure = describe();
}

Mat embed(const Mat& t, int n) {
  Mat out(t.field(), n, n);
  for (int i = 0; i < t.rows(); ++i)
    for (int j = 0; j < t.cols(); ++j) out(i, j) = t(i, j);
  return out;
}

}  // namespace

PartialMap::PartialMap(Mat m, int domain_dim) : m_(std::move(m)), domain_(domain_dim) {
  if (!m_.square()) throw InvalidArgument("partial map must be stored as a square matrix");
  if (domain_ < 0 || domain_ > m_.rows()) throw InvalidArgument("domain dimension out of range");
  for (int i = 0; i < m_.rows(); ++i)
    for (int j = domain_; j < m_.cols(); ++j)
      if (m_(i, j) != 0) throw InvalidArgument("partial map has a non-zero column outside its domain");
}

int PartialMap::stable_rank() const { return stable_image(m_, domain_).dim(); }

bool PartialMap::is_semi_idempotent() const {
  const Subspace inf = stable_image(m_, domain_);
  if (!coordinate_subspace(m_.field(), n(), domain_).contains(inf)) return false;
  if (inf.dim() == 0) return true;
  const Mat frame = inf.frame();
  return mat_mul(m_, frame) == frame;
}

bool PartialMap::image_in_domain() const {
  for (int i = domain_; i < n(); ++i)
    for (int j = 0; j < n(); ++j)
      if (m_(i, j) != 0) return false;
  return true;
}

Mat jordan_matrix(const Field& f, const std::vector<int>& blocks, int ell) {
  if (ell < 0) throw InvalidArgument("identity block size must be non-negative");
  int n = ell;
  for (int b : blocks) {
    if (b <= 0) throw InvalidArgument("Jordan block sizes must be positive");
    n += b;
  }
  Mat a(f, n, n);
  for (int i = 0; i < ell; ++i) a(i, i) = 1;
  int start = ell;
  for (int b : blocks) {
    for (int k = 0; k + 1 < b; ++k) a(start + k + 1, start + k) = 1;
    start += b;
  }
  return a;
}

ExtensionCounts count_extensions_jordan(const Field& f, const std::vector<int>& blocks, bool same_rank) {
  if (blocks.empty()) throw InvalidArgument("need at least one Jordan block");
  const Mat a = jordan_matrix(f, blocks);
  const int n = a.rows(), rs = blocks.back(), s = static_cast<int>(blocks.size());
  if (same_rank && rs <= 1) throw InvalidArgument("the same-rank count needs a last block of size > 1");
  const int rank_a = mat_rank(a);
  ExtensionCounts out;
  out.expected = upow(f.q(), same_rank ? n - rs - (s - 1) : n - rs);
  for_each_last_column(a, [&](const Mat& b) {
    if (same_rank && mat_rank(b) != rank_a) return;
    if (is_nilpotent(b))
      ++out.nilpotent;
    else if (is_semi_idempotent(b))
      ++out.non_nilpotent;
  });
  return out;
}

std::map<int, std::uint64_t> last_column_counts(const Mat& m, std::optional<int> target_rank) {
  if (!m.square() || m.rows() == 0) throw InvalidArgument("need a non-empty square matrix");
  std::map<int, std::uint64_t> out;
  for_each_last_column(m, [&](const Mat& s) {
    if (target_rank && mat_rank(s) != *target_rank) return;
    if (is_semi_idempotent(s)) ++out[stable_rank(s)];
  });
  return out;
}

std::map<int, std::uint64_t> e_counts(const PartialMap& t, std::optional<int> target_rank) {
  if (t.domain_dim() != t.n() - 1) throw InvalidArgument("e_counts needs a domain of codimension 1");
  return last_column_counts(t.matrix(), target_rank);
}

SumCheck check_vanishing_sum(const PartialMap& t, int r, const RankFn& fn) {
  if (t.n() == 0 || t.domain_dim() != t.n() - 1) throw InvalidArgument("vanishing sum needs domain V_{n-1}");
  if (t.image_in_domain()) throw InvalidArgument("vanishing sum needs im T outside V_{n-1}");
  if (!t.is_semi_idempotent()) throw InvalidArgument("vanishing sum needs a semi-idempotent T");
  const long q = t.matrix().field().q();
  SumCheck out{0, 0};
  for_each_last_column(t.matrix(), [&](const Mat& s) {
    const int rk = mat_rank(s);
    if (rk > r || !is_semi_idempotent(s)) return;
    out.value += mu(stable_rank(s), q) * eval(fn, rk);
  });
  return out;
}

SumCheck check_inner_sum(const Mat& t, int r, const RankFn& fn) {
  if (!t.square() || t.rows() == 0) throw InvalidArgument("inner sum needs a non-empty square T");
  if (!is_semi_idempotent(t)) throw InvalidArgument("inner sum needs a semi-idempotent T");
  const int rk = mat_rank(t);
  if (rk > r) throw InvalidArgument("inner sum needs rank T <= r");
  const long q = t.field().q();
  SumCheck out{0, 0};
  for_each_last_column(embed(t, t.rows() + 1), [&](const Mat& s) {
    const int rs = mat_rank(s);
    if (rs > r || !is_semi_idempotent(s)) return;
    out.value += mu(stable_rank(s), q) * eval(fn, rs);
  });
  const Rat base = mu(stable_rank(t), q) * Rat(int_pow(q, static_cast<unsigned long>(rk)));
  out.expected = rk < r ? base * (eval(fn, rk) - eval(fn, rk + 1)) : base * eval(fn, rk);
  return out;
}

Rat h_ell(int ell, int j, const PartialMap& t_r, std::uint64_t budget) {
  const int n = t_r.n(), r = t_r.domain_dim();
  if (ell < 0 || ell > n - r) throw InvalidArgument("h_ell needs 0 <= ell <= n - r");
  if (j < 0 || j > r) throw InvalidArgument("h_ell needs 0 <= j <= r");
  const int dim = n - ell;
  const Mat& m = t_r.matrix();
  for (int i = dim; i < n; ++i)
    for (int c = 0; c < r; ++c)
      if (m(i, c) != 0) return 0;  // T_r does not land in V_{n-ell}
  const Field& f = m.field();
  const long q = f.q();
  Mat base(f, dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int c = 0; c < r; ++c) base(i, c) = m(i, c);
  Rat sum = 0;
  for_each_matrix(
      f, dim, dim - r,
      [&](const Mat& tail) {
        Mat s = base;
        for (int i = 0; i < dim; ++i)
          for (int c = 0; c < dim - r; ++c) s(i, r + c) = tail(i, c);
        const int rk = mat_rank(s);
        if (rk > j || !is_semi_idempotent(s)) return;
        sum += mu(stable_rank(s), q) * Rat(q_binomial(dim - rk, j - rk, q));
      },
      budget);
  return sum * Rat(int_pow(q, static_cast<unsigned long>(ell * j)));
}

std::vector<RankFn> rank_test_functions(int n) {
  std::vector<RankFn> out;
  for (int k = 0; k <= n; ++k) {
    RankFn delta(static_cast<std::size_t>(n + 1), 0);
    delta[static_cast<std::size_t>(k)] = 1;
    out.push_back(std::move(delta));
  }
  RankFn one(static_cast<std::size_t>(n + 1)), id(one), sq(one);
  for (int k = 0; k <= n; ++k) {
    one[static_cast<std::size_t>(k)] = 1;
    id[static_cast<std::size_t>(k)] = k;
    sq[static_cast<std::size_t>(k)] = static_cast<long>(k) * k;
  }
  out.push_back(one);
  out.push_back(id);
  out.push_back(sq);
  return out;
}

std::vector<LemmaCheck> check_jordan_lemmas(const Field& f, int n) {
  LemmaCheck count{"jordan-extension-count",
                   "changing the last column of diag(J_{r_1}, ..., J_{r_s}) gives q^{n-r_s} nilpotent and "
                   "q^{n-r_s} non-nilpotent semi-idempotent matrices"};
  LemmaCheck count_rank{"jordan-extension-count-same-rank",
                        "for r_s > 1, both counts restricted to the original rank equal q^{n-r_s-(s-1)}"};
  LemmaCheck rel{"jordan-stable-rank-relation",
                 "for A' = diag(I_ell, A): e(A', ell) = q^ell e(A', ell + 1) and e(A', ell + 1) = q^{n-r_s}"};
  LemmaCheck rel_rank{"jordan-stable-rank-relation-same-rank",
                      "for r_s > 1: e(A', rank A', ell) = q^ell e(A', rank A', ell + 1)"};
  const int q = f.q();
  for (int m = 1; m <= n; ++m) {
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    compositions(m, cur, comps);
    for (const auto& blocks : comps) {
      const int rs = blocks.back();
      const ExtensionCounts c = count_extensions_jordan(f, blocks, false);
      record(count, c.nilpotent == c.expected && c.non_nilpotent == c.expected, [&] {
        return "blocks " + blocks_string(blocks) + ": nilpotent " + std::to_string(c.nilpotent) + ", non-nilpotent " +
               std::to_string(c.non_nilpotent) + ", expected " + std::to_string(c.expected);
      });
      if (rs > 1) {
        const ExtensionCounts cr = count_extensions_jordan(f, blocks, true);
        record(count_rank, cr.nilpotent == cr.expected && cr.non_nilpotent == cr.expected, [&] {
          return "blocks " + blocks_string(blocks) + ": nilpotent " + std::to_string(cr.nilpotent) +
                 ", non-nilpotent " + std::to_string(cr.non_nilpotent) + ", expected " + std::to_string(cr.expected);
        });
      }
      for (int ell = 0; ell + m <= n; ++ell) {
        const Mat a = jordan_matrix(f, blocks, ell);
        const auto e = last_column_counts(a);
        record(rel, at(e, ell) == upow(q, ell) * at(e, ell + 1) && at(e, ell + 1) == upow(q, m - rs), [&] {
          return "blocks " + blocks_string(blocks) + ", ell " + std::to_string(ell) + ": e(ell) = " +
                 std::to_string(at(e, ell)) + ", e(ell + 1) = " + std::to_string(at(e, ell + 1));
        });
        if (rs > 1) {
          const auto er = last_column_counts(a, mat_rank(a));
          record(rel_rank, at(er, ell) == upow(q, ell) * at(er, ell + 1), [&] {
            return "blocks " + blocks_string(blocks) + ", ell " + std::to_string(ell) + ": e(rank, ell) = " +
                   std::to_string(at(er, ell)) + ", e(rank, ell + 1) = " + std::to_string(at(er, ell + 1));
          });
        }
      }
    }
  }
  return {count, count_rank, rel, rel_rank};
}

std::vector<LemmaCheck> check_corank1_extensions(const Field& f, int n, std::uint64_t budget) {
  LemmaCheck rel{"corank1-extension-relation", "e(T, srk T) = q^{srk T} e(T, srk T + 1)"};
  LemmaCheck rel_rank{"corank1-extension-relation-rank",
                      "if im T is not inside W: e(T, i, srk T) = q^{srk T} e(T, i, srk T + 1) for i = rank T, "
                      "rank T + 1"};
  const int q = f.q();
  for (int m = 1; m <= n; ++m) {
    checked_count(q, m, m, budget);
    for_each_matrix(
        f, m, m - 1,
        [&](const Mat& cols) {
          const PartialMap t(embed(cols, m), m - 1);
          if (!t.is_semi_idempotent()) return;
          const int s = t.stable_rank();
          const auto e = e_counts(t);
          record(rel, at(e, s) == upow(q, s) * at(e, s + 1), [&] {
            return "T = " + t.matrix().to_string() + ": e(srk) = " + std::to_string(at(e, s)) +
                   ", e(srk + 1) = " + std::to_string(at(e, s + 1));
          });
          if (t.image_in_domain()) return;
          for (int i : {t.rank(), t.rank() + 1}) {
            const auto er = e_counts(t, i);
            record(rel_rank, at(er, s) == upow(q, s) * at(er, s + 1), [&] {
              return "T = " + t.matrix().to_string() + ", rank " + std::to_string(i) +
                     ": e(srk) = " + std::to_string(at(er, s)) + ", e(srk + 1) = " + std::to_string(at(er, s + 1));
            });
          }
        },
        budget);
  }
  return {rel, rel_rank};
}

std::vector<LemmaCheck> check_semi_idempotent_sums(const Field& f, int n, std::uint64_t budget) {
  LemmaCheck vanish{"vanishing-sum",
                    "for semi-idempotent T: V_{n-1} -> V_n with im T outside V_{n-1}, the sum of "
                    "mu(srk S) f(rank S) over extensions of rank <= r is 0"};
  LemmaCheck inner{"inner-sum", "E_n(f, T) equals its closed form for semi-idempotent T on V_{n-1}"};
  LemmaCheck hind{"h-independence", "h_ell(j, T_r) does not depend on ell"};
  const auto fns = rank_test_functions(n);

  for (int m = 2; m <= n; ++m) {
    checked_count(f.q(), m, m, budget);
    for_each_matrix(
        f, m, m - 1,
        [&](const Mat& cols) {
          const PartialMap t(embed(cols, m), m - 1);
          if (t.image_in_domain() || !t.is_semi_idempotent()) return;
          for (int r = 0; r <= m; ++r)
            for (std::size_t k = 0; k < fns.size(); ++k) {
              const SumCheck c = check_vanishing_sum(t, r, fns[k]);
              record(vanish, c.holds(), [&] {
                return "T = " + t.matrix().to_string() + ", r = " + std::to_string(r) + ", test function " +
                       std::to_string(k) + ": sum " + to_string(c.value);
              });
            }
        },
        budget);
  }

  for (int m = 2; m <= n; ++m)
    for (const Mat& t : enumerate_semi_idempotents(f, m - 1, m - 1, budget)) {
      for (int r = mat_rank(t); r <= m; ++r)
        for (std::size_t k = 0; k < fns.size(); ++k) {
          const SumCheck c = check_inner_sum(t, r, fns[k]);
          record(inner, c.holds(), [&] {
            return "T = " + t.to_string() + ", r = " + std::to_string(r) + ", test function " + std::to_string(k) +
                   ": enumerated " + to_string(c.value) + ", closed form " + to_string(c.expected);
          });
        }
    }

  for (int r = 0; r < n; ++r)
    for_each_matrix(
        f, n, r,
        [&](const Mat& cols) {
          const PartialMap t(embed(cols, n), r);
          if (!t.is_semi_idempotent()) return;
          for (int j = 0; j <= r; ++j) {
            const Rat h0 = h_ell(0, j, t, budget);
            for (int ell = 1; ell <= n - r; ++ell) {
              const Rat h = h_ell(ell, j, t, budget);
              record(hind, h == h0, [&] {
                return "T_r = " + t.matrix().to_string() + ", j = " + std::to_string(j) + ": h_0 = " + to_string(h0) +
                       ", h_" + std::to_string(ell) + " = " + to_string(h);
              });
            }
          }
        },
        budget);

  return {vanish, inner, hind};
}

}  // namespace mmu
