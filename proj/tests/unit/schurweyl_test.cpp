#include <doctest.h>

#include "mmu/schurweyl.hpp"

using namespace mmu;

TEST_SUITE("schurweyl") {

TEST_CASE("basic operators") {
  const Field& f = Field::get(2);
  const BasisMap id = left_action(Mat::identity(f, 2), 1);
  for (std::size_t x = 0; x < id.size(); ++x) CHECK(id[x] == x);
  for (auto y : left_action(Mat::zero(f, 2, 2), 2)) CHECK(y == 0);
  CHECK(right_action(Mat::identity(f, 3), 1).size() == 8);
  CHECK(bimodule_commutes(f, 2, 2));
}

TEST_CASE("commutant and image dimensions") {
  const Field& f = Field::get(2);
  CHECK(commutant_dimension(f, 2, 1, Side::left) == 2);
  CHECK(commutant_dimension(f, 1, 1, Side::left) == 2);
  CHECK(image_dimension(f, 2, 1, Side::right) == 2);
  CHECK(image_dimension(f, 1, 3, Side::left) == 2);
  CHECK(commutant_dimension(f, 2, 2, Side::left) == image_dimension(f, 2, 2, Side::right));
  CHECK_THROWS_AS(commutant_dimension(f, 3, 3, Side::left, 1000), BudgetExceeded);
}

TEST_CASE("double centralizer") {
  const Field& f = Field::get(2);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    const DoubleCentralizerReport rep = double_centralizer(f, n, m);
    CAPTURE(n);
    CAPTURE(m);
    CHECK(rep.containment);
    CHECK(rep.holds());
  }
  const DoubleCentralizerReport r21 = double_centralizer(f, 2, 1);
  CHECK(r21.left_image == 10);
  CHECK(r21.right_image == 2);
}

TEST_CASE("dimension identity") {
  CHECK(sw_dimension_identity(1, 1, 2));
  CHECK(sw_dimension_identity(2, 1, 2));
  CHECK(sw_dimension_identity(2, 2, 2));
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m)
      for (long q : {2, 3, 4}) CHECK(sw_dimension_identity(n, m, q));
}

TEST_CASE("trace identity") {
  const auto simples = simple_modules(Field::get(2), 2);
  for (int m = 1; m <= 3; ++m) {
    const TraceCheck tc = tensor_trace_check(simples, m);
    CAPTURE(tc.first_mismatch);
    CHECK(tc.holds);
    CHECK(tc.elements == 16);
  }
  CHECK_THROWS_AS(tensor_trace_check({}, 1), InvalidArgument);
}

}
