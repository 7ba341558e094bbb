#include <doctest.h>

#include <random>
#include <set>

#include "mmu/repmod.hpp"
#include "mmu/subspace.hpp"

using namespace mmu;

namespace {

const SimpleModule& find(const std::vector<SimpleModule>& s, const std::string& label) {
  for (const auto& m : s)
    if (m.label.to_string() == label) return m;
  throw std::logic_error("no simple " + label);
}

std::map<std::string, long> as_map(const std::vector<std::pair<SimpleLabel, long>>& d) {
  std::map<std::string, long> out;
  for (const auto& [l, m] : d)
    if (m) out[l.to_string()] = m;
  return out;
}

// Independent character oracle for L_n(triv_r): the number of r-dimensional
// subspaces with m(U) = U, counted by brute force over vectors.
long fixed_subspaces(const Mat& m, int r) {
  long count = 0;
  for (const Subspace& u : enumerate_subspaces(m.field(), m.rows(), r)) count += image_of(m, u) == u;
  return count;
}

}  // namespace

TEST_SUITE("repmod") {

TEST_CASE("built-in irreducibles") {
  const Field& f = Field::get(2);
  const IrrepSet r0 = builtin_irreps(f, 0);
  CHECK(r0.complete);
  CHECK(r0.reps.size() == 1);
  const IrrepSet r2 = builtin_irreps(f, 2);
  CHECK(r2.complete);
  long sq = 0;
  for (const auto& rho : r2.reps) {
    CHECK(is_homomorphism(rho));
    sq += rho.dim * rho.dim;
  }
  CHECK(sq == 6);
  CHECK_FALSE(builtin_irreps(Field::get(3), 1).complete);
}

TEST_CASE("closure rejects inconsistent generators") {
  const Field& f = Field::get(2);
  const Mat t = Mat::from_rows(f, {{1, 1}, {0, 1}});
  RatMatrix two(1, 1);
  two(0, 0) = 2;
  CHECK_THROWS_AS(rep_from_generators(f, 2, "bad", 1, {{t, two}}), InvalidArgument);
}

TEST_CASE("module dimensions and small actions") {
  const Field& f = Field::get(2);
  const auto simples = simple_modules(f, 2);
  CHECK(simples.size() == 5);
  long total = 0;
  for (const auto& s : simples) total += s.module.dim * s.module.dim;
  CHECK(total == 16);
  const auto& triv1 = find(simples, "triv_1");
  CHECK(triv1.module.dim == 3);
  CHECK(triv1.module(Mat::identity(f, 2)) == RatMatrix::identity(3));
  const auto& triv0 = find(simples, "triv_0");
  for (const Mat& m : enumerate_matrices(f, 2)) CHECK(triv0.module(m) == RatMatrix::identity(1));
  CHECK(find(simples, "std_2").module.dim == 2);
}

TEST_CASE("characters") {
  const Field& f = Field::get(2);
  for (const auto& s : simple_modules(f, 2)) {
    CAPTURE(s.label.to_string());
    std::string detail;
    CHECK(module_axiom_holds(s.module, &detail));
    const CharTable chi = character(s.module);
    CHECK(chi == character_formula(2, s.pi));
    CHECK(chi.at(mat_key(Mat::identity(f, 2))) == s.module.dim);
    if (s.label.r >= 1) CHECK(chi.at(mat_key(Mat::zero(f, 2, 2))) == 0);
    if (s.label.name == "triv")
      for (const Mat& m : enumerate_matrices(f, 2)) CHECK(chi.at(mat_key(m)) == fixed_subspaces(m, s.label.r));
  }
  const CharTable chi = character(find(simple_modules(f, 2), "triv_1").module);
  CHECK(chi.at(mat_key(e_matrix(f, 2, 1))) == 1);
}

TEST_CASE("restriction to the group is parabolic induction") {
  const Field& f = Field::get(2);
  const auto classes = gl_conjugacy_classes(f, 2);
  CHECK(classes.size() == 3);
  for (const auto& s : simple_modules(f, 2)) CHECK(restrict_to_group_char(s.module) == parabolic_induction_char(s.pi, 2));
  // Permutation character on the three lines: 3 at the identity, 1 on transpositions, 0 on 3-cycles.
  const CharTable ind = parabolic_induction_char(trivial_rep(f, 1), 2);
  std::multiset<Rat> values;
  for (const auto& cls : classes) values.insert(ind.at(mat_key(cls.front())));
  CHECK(values == std::multiset<Rat>{0, 1, 3});
  for (const auto& [k, v] : parabolic_induction_char(trivial_rep(f, 2), 2)) CHECK(v == 1);
  for (const auto& [k, v] : parabolic_induction_char(trivial_rep(f, 0), 2)) CHECK(v == 1);
}

TEST_CASE("restriction to smaller monoids") {
  const Field& f = Field::get(2);
  for (const auto& s : simple_modules(f, 2))
    for (int k = 0; k <= 2; ++k) {
      const MonoidModule res = restrict_to_submonoid(s.module, k);
      CAPTURE(s.label.to_string());
      CAPTURE(k);
      if (k < s.label.r) {
        CHECK(res.dim == 0);
      } else {
        CHECK(character(res) == character_formula(k, s.pi));
      }
    }
  const MonoidModule same = restrict_to_submonoid(find(simple_modules(f, 2), "std_2").module, 2);
  CHECK(character(same) == character(find(simple_modules(f, 2), "std_2").module));
}

TEST_CASE("self-duality") {
  const Field& f = Field::get(2);
  for (const auto& s : simple_modules(f, 2)) CHECK(self_duality_check(s.module));
  CHECK(self_duality_check(tensor_power_module(f, 2, 1)));
  CHECK(self_duality_check(tensor_power_module(Field::get(3), 2, 1)));

  // Negative control: the entry (0, 1) as a one-dimensional "action" is not
  // transpose invariant.
  MonoidModule twisted{&f, 2, 1, "twisted", {}};
  for (const Mat& m : enumerate_matrices(f, 2)) {
    RatMatrix a(1, 1);
    a(0, 0) = m(0, 1);
    twisted.action.emplace(mat_key(m), a);
  }
  CHECK_FALSE(self_duality_check(twisted));
  CHECK_FALSE(transpose_invariant(character(twisted), f, 2));
}

TEST_CASE("decomposition") {
  const Field& f = Field::get(2);
  const auto simples = simple_modules(f, 2);
  CHECK(as_map(decompose(find(simples, "std_2").module, simples)) == std::map<std::string, long>{{"std_2", 1}});
  CHECK(as_map(decompose(tensor_power_module(f, 2, 1), simples)) ==
        std::map<std::string, long>{{"triv_0", 1}, {"triv_1", 1}});
  // V (x) V: qbinom(2, r) dim(pi) copies of L(pi).
  CHECK(as_map(decompose(tensor_power_module(f, 2, 2), simples)) ==
        std::map<std::string, long>{{"triv_0", 1}, {"triv_1", 3}, {"triv_2", 1}, {"sign_2", 1}, {"std_2", 2}});
}

TEST_CASE("multiplicity inversion") {
  CHECK(multiplicities_n_from_m({}, 5).empty());
  const MultiplicityMap point = {{{"p", Partition({1})}, 1}};
  const MultiplicityMap n = multiplicities_n_from_m(point, 4);
  for (int k = 0; k <= 4; ++k)
    for (const Partition& lam : partitions(k)) {
      auto it = n.find({"p", lam});
      const long got = it == n.end() ? 0 : it->second;
      CHECK(got == (is_horizontal_strip(lam, Partition({1})) ? 1 : 0));
    }

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> v(0, 3);
  for (int trial = 0; trial < 10; ++trial) {
    MultiplicityMap m;
    for (const char* label : {"x", "y"})
      for (int k = 0; k <= 6; ++k)
        for (const Partition& p : partitions(k))
          if (int x = v(rng)) m[{label, p}] = x;
    CHECK(multiplicities_m_from_n(multiplicities_n_from_m(m, 6), 6) == m);
  }
}

}
