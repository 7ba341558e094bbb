#include <doctest.h>

#include <set>

#include "mmu/error.hpp"
#include "mmu/fq.hpp"

using namespace mmu;

TEST_SUITE("fq") {

TEST_CASE("small prime fields") {
  const Field& f2 = Field::get(2);
  CHECK(f2.add(1, 1) == 0);
  const Field& f3 = Field::get(3);
  CHECK(f3.mul(2, 2) == 1);
  const Field& f5 = Field::get(5);
  CHECK(f5.inv(2) == 3);
  CHECK_THROWS_AS(f5.inv(0), ArithmeticError);
}

TEST_CASE("F_4 with modulus x^2 + x + 1") {
  const Field& f = Field::get(4);
  CHECK(f.modulus() == std::vector<int>{1, 1, 1});
  const Elem g = 2;  // residue of x
  CHECK(f.mul(g, g) == f.add(g, 1));
  CHECK(f.inv(g) == f.add(g, 1));
}

TEST_CASE("non prime powers are rejected") {
  for (int q : {0, 1, 6, 10, 12, 50, 64}) CHECK_THROWS_AS(Field::get(q), InvalidArgument);
  CHECK(prime_power_decomposition(27) == std::pair{3, 3});
  CHECK(prime_power_decomposition(12) == std::pair{0, 0});
}

TEST_CASE("interning returns one object per order") { CHECK(&Field::get(9) == &Field::get(9)); }

TEST_CASE("field axioms hold exhaustively") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    const Field& f = Field::get(q);
    bool ok = true;
    for (int a = 0; a < q; ++a) {
      ok = ok && f.add(Elem(a), 0) == a && f.mul(Elem(a), 1) == a && f.add(Elem(a), f.neg(Elem(a))) == 0;
      if (a) ok = ok && f.mul(Elem(a), f.inv(Elem(a))) == 1;
      for (int b = 0; b < q; ++b) {
        ok = ok && f.add(Elem(a), Elem(b)) == f.add(Elem(b), Elem(a)) && f.mul(Elem(a), Elem(b)) == f.mul(Elem(b), Elem(a));
        for (int c = 0; c < q; ++c) {
          const Elem x = Elem(a), y = Elem(b), z = Elem(c);
          ok = ok && f.add(f.add(x, y), z) == f.add(x, f.add(y, z)) && f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)) &&
               f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z));
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("Frobenius is a bijection") {
  for (int q : {4, 8, 9, 16, 25, 27, 49}) {
    const Field& f = Field::get(q);
    std::set<Elem> image;
    for (int a = 0; a < q; ++a) image.insert(f.pow(Elem(a), static_cast<unsigned>(f.p())));
    CHECK(image.size() == static_cast<std::size_t>(q));
  }
}

TEST_CASE("irreducibility test") {
  CHECK(is_irreducible({1, 1, 1}, 2));
  CHECK_FALSE(is_irreducible({1, 0, 1}, 2));  // (x + 1)^2
  CHECK(is_irreducible({1, 1, 0, 0, 1}, 2));  // x^4 + x + 1
  CHECK_FALSE(is_irreducible({1, 0, 1, 0, 1}, 2));  // (x^2 + x + 1)^2
  CHECK_THROWS_AS(Field::get(4, {1, 0, 1}), InvalidArgument);
}

}
