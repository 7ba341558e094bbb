#include <doctest.h>

#include "mmu/subgrpd.hpp"
#include "mmu/suites.hpp"

using namespace mmu;

namespace {

Subspace col_span(const Field& f, std::vector<std::vector<int>> cols) { return Subspace::span_of_columns(Mat::from_rows(f, cols)); }

}  // namespace

TEST_SUITE("subgrpd") {

TEST_CASE("subspace enumeration") {
  const Field& f = Field::get(2);
  CHECK(enumerate_subspaces(f, 2, 1).size() == 3);
  CHECK(enumerate_subspaces(f, 4, 2).size() == 35);
  CHECK(enumerate_subspaces(f, 3, 0).size() == 1);
  CHECK(enumerate_all_subspaces(f, 3).size() == 16);
  const auto lines = enumerate_subspaces(f, 3, 1);
  CHECK(std::is_sorted(lines.begin(), lines.end()));
}

TEST_CASE("canonical isomorphisms") {
  const Field& f = Field::get(2);
  CHECK(canonical_iso(col_span(f, {{1}, {0}})) == Mat::from_rows(f, {{1}, {0}}));
  CHECK(canonical_iso(Subspace::whole(f, 3)) == Mat::identity(f, 3));
  CHECK(canonical_iso(col_span(f, {{1}, {1}})) == Mat::from_rows(f, {{1}, {1}}));
}

TEST_CASE("psi_1 of e_{2,1}") {
  const Field& f = Field::get(2);
  const GroupoidElem got = psi_r(AlgElem::basis(e_matrix(f, 2, 1)), 1);
  const Subspace x = col_span(f, {{1}, {0}}), d = col_span(f, {{1}, {1}});
  GroupoidElem want(f, 2, 1);
  want.add_term({x, x, Mat::identity(f, 1)}, 1);
  want.add_term({d, x, Mat::identity(f, 1)}, 1);
  CHECK(got == want);
}

TEST_CASE("groupoid composition") {
  const Field& f = Field::get(3);
  const Subspace u = col_span(f, {{1}, {0}}), v = col_span(f, {{0}, {1}}), w = col_span(f, {{1}, {1}});
  const Mat two = Mat::from_rows(f, {{2}});
  GroupoidElem a(f, 2, 1), b(f, 2, 1);
  a.add_term({u, v, two}, 1);
  b.add_term({v, w, two}, 1);
  GroupoidElem want(f, 2, 1);
  want.add_term({u, w, Mat::identity(f, 1)}, 1);
  CHECK(groupoid_mul(b, a) == want);
  CHECK(groupoid_mul(a, b).is_zero());
  CHECK(groupoid_mul(groupoid_unit(f, 2, 1), a) == a);
}

TEST_CASE("psi is an isomorphism at (2, 2)") {
  const Field& f = Field::get(2);
  CHECK(psi_full_rank(f, 2) == 16);
  CHECK(groupoid_algebra_dimension(f, 2) == 16);
  CHECK(groupoid_algebra_dimension(f, 3) == 512);
  for (const auto& c : check_psi(f, 2)) {
    CAPTURE(c.first_failure);
    CHECK(c.passed());
  }
}

TEST_CASE("block matrices are multiplicative") {
  const Field& f = Field::get(2);
  const auto mats = enumerate_matrices(f, 2);
  for (std::size_t i = 0; i < mats.size(); i += 3)
    for (std::size_t j = 0; j < mats.size(); j += 5) {
      const GroupoidElem a = psi_r(AlgElem::basis(mats[i]), 1), b = psi_r(AlgElem::basis(mats[j]), 1);
      CHECK(groupoid_to_matrix_algebra(groupoid_mul(a, b)) ==
            block_mul(groupoid_to_matrix_algebra(a), groupoid_to_matrix_algebra(b)));
    }
  GroupoidElem id(f, 2, 1);
  const Subspace x = col_span(f, {{1}, {0}});
  id.add_term({x, x, Mat::identity(f, 1)}, 1);
  const GroupoidMatrix m = groupoid_to_matrix_algebra(id);
  const std::size_t i = static_cast<std::size_t>(std::find(m.objects.begin(), m.objects.end(), x) - m.objects.begin());
  CHECK(m.blocks[i][i] == GroupAlgElem{{Mat::identity(f, 1), 1}});
}

TEST_CASE("preimages of groupoid basis elements") {
  const Field& f = Field::get(2);
  for (int r = 0; r <= 2; ++r)
    for (const Subspace& u : enumerate_subspaces(f, 2, r))
      for (const Subspace& v : enumerate_subspaces(f, 2, r))
        for (const Mat& g : enumerate_gl(f, r)) {
          const GroupoidBasis b{u, v, g};
          const AlgElem pre = preimage_of_groupoid_basis(b);
          const auto images = psi_full(pre);
          GroupoidElem want(f, 2, r);
          want.add_term(b, 1);
          CHECK(images[static_cast<std::size_t>(r)] == want);
          for (int s = r + 1; s <= 2; ++s) CHECK(images[static_cast<std::size_t>(s)].is_zero());
        }
}

}
