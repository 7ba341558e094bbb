#include <doctest.h>

#include "mmu/kovacs.hpp"

using namespace mmu;

namespace {

std::vector<std::string> rendered(const ClassCoeffs& c) {
  std::vector<std::string> out;
  for (const auto& [k, v] : c) out.push_back(k.to_string() + ": " + to_string(v));
  return out;
}

}  // namespace

TEST_SUITE("kovacs") {

TEST_CASE("class keys") {
  CHECK(class_keys(2, 1).size() == 3);
  CHECK(class_keys(3, 2).size() == 6);
  CHECK(class_keys(4, 3).size() == 11);
  CHECK(class_keys(2, 1).back().to_string() == "(2, 1, 1)");
}

TEST_CASE("system shape") {
  const KovacsSystem sys = build_system(Field::get(2), 3, 2);
  CHECK(sys.keys.size() == 6);
  CHECK(sys.is_upper_triangular());
  CHECK(sys.diagonal_is_q_powers());
  CHECK_THROWS_AS(build_system(Field::get(2), 4, 1, 100), BudgetExceeded);
}

TEST_CASE("solved coefficients") {
  CHECK(rendered(solve_unit_coeffs(Field::get(2), 2, 1)) ==
        std::vector<std::string>{"(2, 0, 0): -1/2", "(2, 1, 0): -1/2", "(2, 1, 1): 1/2"});
  CHECK(rendered(solve_unit_coeffs(Field::get(3), 2, 1)) ==
        std::vector<std::string>{"(2, 0, 0): -1/3", "(2, 1, 0): -1/3", "(2, 1, 1): 1/3"});
  std::vector<Rat> n3;
  for (const auto& [k, v] : solve_unit_coeffs(Field::get(2), 3, 2)) n3.push_back(v);
  CHECK(n3 == std::vector<Rat>{Rat(1, 8), Rat(1, 8), Rat(-1, 8), Rat(1, 8), Rat(-1, 8), Rat(1, 4)});
  const ClassCoeffs n4 = solve_unit_coeffs(Field::get(2), 4, 3);
  CHECK(n4.back().first.to_string() == "(4, 3, 3, 3, 3)");
  CHECK(n4.back().second == Rat(1, 8));
}

TEST_CASE("interpolation in q") {
  const ClassLaurents two = interpolate_coeffs(2, 1, {2, 3, 5});
  REQUIRE(two.size() == 3);
  CHECK(two[0].second.to_string() == "-1/q");
  CHECK(two[1].second.to_string() == "-1/q");
  CHECK(two[2].second.to_string() == "1/q");
  CHECK(interpolate_coeffs(3, 2, {2, 3, 4, 5, 7}).back().second.to_string() == "1/q^2");
  const ClassLaurents one = interpolate_coeffs(1, 0, {2, 3, 4});
  REQUIRE(one.size() == 1);
  CHECK(one[0].second.to_string() == "1");
}

TEST_CASE("closed form matches the solved system") {
  for (auto [n, q, r] : std::vector<std::tuple<int, int, int>>{{2, 2, 1}, {3, 2, 2}, {3, 3, 1}, {2, 3, 0}}) {
    const ClosedFormReport rep = compare_with_closed_form(Field::get(q), n, r);
    CHECK(rep.identical);
    CHECK(rep.mismatches.empty());
  }
}

TEST_CASE("listing format") {
  const ClassLaurents c = interpolate_coeffs(2, 1, {2, 3, 5});
  CHECK(format_listing(2, c, "  # ") ==
        "  # n = 2:\n"
        "  #   (2, 0, 0): -1/q\n"
        "  #   (2, 1, 0): -1/q\n"
        "  #   (2, 1, 1): 1/q\n");
}

}
