#include "mmu/schurweyl.hpp"

#include <algorithm>
#include <map>

#include "mmu/qcomb.hpp"

namespace mmu {

namespace {

std::vector<Mat> all_matrices(const Field& f, int rows, int cols, std::uint64_t budget) {
  std::vector<Mat> out;
  for_each_matrix(f, rows, cols, [&](const Mat& x) { out.push_back(x); }, budget);
  return out;
}

std::vector<BasisMap> side_operators(const Field& f, int n, int m, Side side, std::uint64_t budget) {
  std::vector<BasisMap> out;
  if (side == Side::left)
    for (const Mat& a : all_matrices(f, n, n, budget)) out.push_back(left_action(a, m));
  else
    for (const Mat& b : all_matrices(f, m, m, budget)) out.push_back(right_action(b, n));
  return out;
}

// Rows of E phi - phi E = 0 for one basis map phi, over the D^2 entries of E
// (entry (y, x) has column y * D + x).
void commutant_rows(const BasisMap& phi, SparseRowReducer& red) {
  const std::size_t d = phi.size();
  std::vector<std::vector<std::size_t>> preimage(d);
  for (std::size_t z = 0; z < d; ++z) preimage[phi[z]].push_back(z);
  for (std::size_t y = 0; y < d; ++y)
    for (std::size_t x = 0; x < d; ++x) {
      std::map<std::size_t, Rat> row;
      row[y * d + phi[x]] += 1;
      for (std::size_t z : preimage[y]) row[z * d + x] -= 1;
      SparseRowReducer::Row sparse;
      for (auto& [c, v] : row)
        if (v != 0) sparse.emplace_back(c, std::move(v));
      if (!sparse.empty()) red.add(std::move(sparse));
    }
}

bool commute(const BasisMap& a, const BasisMap& b) {
  for (std::size_t x = 0; x < a.size(); ++x)
    if (a[b[x]] != b[a[x]]) return false;
  return true;
}

}  // namespace

BasisMap left_action(const Mat& a, int m) {
  if (!a.square()) throw InvalidArgument("left action needs a square matrix");
  BasisMap out;
  for_each_matrix(a.field(), a.rows(), m, [&](const Mat& x) { out.push_back(mat_key(mat_mul(a, x))); });
  return out;
}

BasisMap right_action(const Mat& b, int n) {
  if (!b.square()) throw InvalidArgument("right action needs a square matrix");
  BasisMap out;
  for_each_matrix(b.field(), n, b.rows(), [&](const Mat& x) { out.push_back(mat_key(mat_mul(x, b))); });
  return out;
}

bool bimodule_commutes(const Field& f, int n, int m, std::uint64_t budget) {
  const auto left = side_operators(f, n, m, Side::left, budget);
  const auto right = side_operators(f, n, m, Side::right, budget);
  for (const auto& a : left)
    for (const auto& b : right)
      if (!commute(a, b)) return false;
  return true;
}

std::size_t commutant_dimension(const Field& f, int n, int m, Side side, std::uint64_t budget) {
  const std::uint64_t d = checked_count(f.q(), n, m, budget);
  if (d * d > budget) throw BudgetExceeded("commutant has " + std::to_string(d * d) + " unknowns");
  const auto ops = side_operators(f, n, m, side, budget);
  if (ops.size() * d * d > budget) throw BudgetExceeded("too many commutant equations");
  SparseRowReducer red(d * d);
  for (const auto& phi : ops) commutant_rows(phi, red);
  return d * d - red.rank();
}

std::size_t image_dimension(const Field& f, int n, int m, Side side, std::uint64_t budget) {
  const std::uint64_t d = checked_count(f.q(), n, m, budget);
  SparseRowReducer red(d * d);
  for (const auto& phi : side_operators(f, n, m, side, budget)) {
    SparseRowReducer::Row row;
    for (std::size_t x = 0; x < d; ++x) row.emplace_back(phi[x] * d + x, 1);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    red.add(std::move(row));
  }
  return red.rank();
}

bool image_in_commutant(const Field& f, int n, int m, Side side, std::uint64_t budget) {
  const Side other = side == Side::left ? Side::right : Side::left;
  const auto mine = side_operators(f, n, m, side, budget);
  for (const auto& b : side_operators(f, n, m, other, budget))
    for (const auto& a : mine)
      if (!commute(a, b)) return false;
  return true;
}

DoubleCentralizerReport double_centralizer(const Field& f, int n, int m, std::uint64_t budget) {
  DoubleCentralizerReport rep;
  rep.left_image = image_dimension(f, n, m, Side::left, budget);
  rep.right_image = image_dimension(f, n, m, Side::right, budget);
  rep.left_commutant = commutant_dimension(f, n, m, Side::left, budget);
  rep.right_commutant = commutant_dimension(f, n, m, Side::right, budget);
  rep.containment = image_in_commutant(f, n, m, Side::left, budget) && image_in_commutant(f, n, m, Side::right, budget);
  return rep;
}

bool sw_dimension_identity(int n, int m, long q) {
  BigInt rhs = 0;
  for (int r = 0; r <= std::min(n, m); ++r) rhs += q_binomial(n, r, q) * q_binomial(m, r, q) * gl_order(r, q);
  return rhs == int_pow(q, static_cast<unsigned long>(n * m));
}

TraceCheck tensor_trace_check(const std::vector<SimpleModule>& simples, int m, std::uint64_t budget) {
  if (simples.empty()) throw InvalidArgument("tensor trace check needs the simple modules");
  const Field& f = *simples.front().module.field;
  const int n = simples.front().module.n;
  const long q = f.q();
  std::vector<CharTable> tables;
  for (const auto& s : simples) tables.push_back(character(s.module));
  const std::vector<Mat> xs = all_matrices(f, n, m, budget);

  TraceCheck out;
  out.holds = true;
  for_each_matrix(
      f, n, n,
      [&](const Mat& a) {
        ++out.elements;
        long fixed = 0;
        for (const Mat& x : xs)
          if (mat_mul(a, x) == x) ++fixed;
        Rat rhs = 0;
        for (std::size_t i = 0; i < simples.size(); ++i) {
          const auto& pi = simples[i].pi;
          if (pi.r > m) continue;
          rhs += Rat(q_binomial(m, pi.r, q)) * pi.dim * tables[i].at(mat_key(a));
        }
        if (rhs == fixed || !out.holds) return;
        out.holds = false;
        out.first_mismatch =
            "a = " + a.to_string() + ": trace " + std::to_string(fixed) + ", simple-module sum " + to_string(rhs);
      },
      budget);
  return out;
}

}  // namespace mmu
