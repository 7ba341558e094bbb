#include "mmu/kovacs.hpp"

#include <algorithm>
#include <map>

namespace mmu {

bool KovacsSystem::is_upper_triangular() const {
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a(i, j) != 0) return false;
  return true;
}

bool KovacsSystem::diagonal_is_q_powers() const {
  for (std::size_t i = 0; i < keys.size(); ++i) {
    Rat d = a(i, i);
    if (d < 1 || d.get_den() != 1) return false;
    while (d > 1) {
      if (d.get_num() % q != 0) return false;
      d /= q;
    }
  }
  return true;
}

std::vector<RankSequence> class_keys(int n, int r) {
  if (r < 0 || r > n) throw InvalidArgument("rank bound out of range");
  std::vector<RankSequence> keys;
  for (const auto& t : semi_idempotent_types(n)) {
    RankSequence s = sequence_of_type(t);
    if (n == 0 || s.values[1] <= r) keys.push_back(std::move(s));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

KovacsSystem build_system(const Field& f, int n, int r, std::uint64_t budget) {
  KovacsSystem sys;
  sys.n = n;
  sys.r = r;
  sys.q = f.q();
  sys.keys = class_keys(n, r);
  const std::size_t k = sys.keys.size();
  std::map<RankSequence, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index.emplace(sys.keys[i], i);
  sys.a = RatMatrix(k, k);
  sys.rhs.assign(k, 0);
  sys.rhs[k - 1] = 1;

  std::vector<std::vector<long>> counts(k, std::vector<long>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    const Mat rep = partial_injective_jordan(type_of_sequence(sys.keys[i]), f);
    // Free part: the last n - r columns.
    for_each_matrix(
        f, n, n - r,
        [&](const Mat& tail) {
          Mat u = rep;
          for (int row = 0; row < n; ++row)
            for (int c = 0; c < n - r; ++c) u(row, r + c) = tail(row, c);
          if (mat_rank(u) > r || !is_semi_idempotent(u)) return;
          ++counts[i][index.at(rank_sequence(u))];
        },
        budget);
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sys.a(i, j) = counts[i][j];
  return sys;
}

ClassCoeffs solve_system(const KovacsSystem& sys) {
  const auto c = rat_solve(sys.a, sys.rhs);
  ClassCoeffs out;
  for (std::size_t i = 0; i < sys.keys.size(); ++i) out.emplace_back(sys.keys[i], c[i]);
  return out;
}

ClassCoeffs solve_unit_coeffs(const Field& f, int n, int r, std::uint64_t budget) {
  return solve_system(build_system(f, n, r, budget));
}

std::pair<long, long> interpolation_bounds(int n, int r) {
  return {-static_cast<long>(n - 1) * r - static_cast<long>(n) * (n - 1) / 2, 0};
}

ClassLaurents interpolate_coeffs(int n, int r, const std::vector<int>& q_samples, std::uint64_t budget) {
  if (q_samples.size() < 3) throw InvalidArgument("interpolation needs at least three q samples");
  std::vector<int> qs = q_samples;
  std::sort(qs.begin(), qs.end());
  if (std::adjacent_find(qs.begin(), qs.end()) != qs.end()) throw InvalidArgument("q samples must be distinct");

  std::vector<ClassCoeffs> per_q;
  for (int q : q_samples) per_q.push_back(solve_unit_coeffs(Field::get(q), n, r, budget));

  const auto [lo, hi] = interpolation_bounds(n, r);
  const long width = std::min<long>(static_cast<long>(q_samples.size()) - 1, hi - lo + 1);
  ClassLaurents out;
  for (std::size_t i = 0; i < per_q.front().size(); ++i) {
    std::vector<std::pair<Rat, Rat>> samples;
    for (std::size_t s = 0; s < q_samples.size(); ++s) samples.emplace_back(Rat(q_samples[s]), per_q[s][i].second);
    bool found = false;
    for (long top = hi; top - width + 1 >= lo && !found; --top) {
      try {
        out.emplace_back(per_q.front()[i].first, laurent_interpolate(samples, top - width + 1, top));
        found = true;
      } catch (const ArithmeticError&) {
      }
    }
    if (!found)
      throw ArithmeticError("no Laurent polynomial in degrees [" + std::to_string(lo) + ", " + std::to_string(hi) +
                            "] fits class " + per_q.front()[i].first.to_string());
  }
  return out;
}

ClosedFormReport compare_with_closed_form(const Field& f, int n, int r, std::uint64_t budget) {
  const ClassCoeffs coeffs = solve_unit_coeffs(f, n, r, budget);
  const std::map<RankSequence, Rat> by_class(coeffs.begin(), coeffs.end());
  AlgElem solved(f, n);
  for_each_matrix(
      f, n, n,
      [&](const Mat& m) {
        if (mat_rank(m) > r || !is_semi_idempotent(m)) return;
        solved.add_term(m, by_class.at(rank_sequence(m)));
      },
      budget);
  const AlgElem closed = eta_r(f, n, r, budget);

  ClosedFormReport rep;
  std::map<MatKey, bool> keys;
  for (const auto& [k, c] : solved.terms()) keys[k] = true;
  for (const auto& [k, c] : closed.terms()) keys[k] = true;
  rep.terms_compared = keys.size();
  for (const auto& [k, unused] : keys) {
    const Rat a = solved.coeff(k), b = closed.coeff(k);
    if (a == b) continue;
    if (rep.mismatches.size() < 8)
      rep.mismatches.push_back(solved.matrix(k).to_string() + ": solved " + to_string(a) + ", closed form " +
                               to_string(b));
    else
      break;
  }
  rep.identical = rep.mismatches.empty();
  return rep;
}

std::string format_listing(int n, const ClassLaurents& coeffs, const std::string& prefix) {
  std::string out = prefix + "n = " + std::to_string(n) + ":\n";
  for (const auto& [key, value] : coeffs) out += prefix + "  " + key.to_string() + ": " + value.to_string() + "\n";
  return out;
}

std::string format_listing(int n, const ClassCoeffs& coeffs, const std::string& prefix) {
  std::string out = prefix + "n = " + std::to_string(n) + ":\n";
  for (const auto& [key, value] : coeffs) out += prefix + "  " + key.to_string() + ": " + to_string(value) + "\n";
  return out;
}

}  // namespace mmu
