#include <doctest.h>

#include "mmu/qcomb.hpp"
#include "mmu/subspace.hpp"

using namespace mmu;

namespace {

PartitionFn delta(const Partition& p, int bound) {
  PartitionFn f(bound);
  f.set(p, 1);
  return f;
}

}  // namespace

TEST_SUITE("qcomb") {

TEST_CASE("partitions") {
  CHECK(partitions(0).size() == 1);
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(8).size() == 22);
  CHECK(partitions(4).front() == Partition({4}));
  CHECK(partitions(4).back() == Partition({1, 1, 1, 1}));
  CHECK(partition_count(10) == 42);
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), InvalidArgument);
}

TEST_CASE("Gaussian binomials") {
  CHECK(q_binomial(2, 1, 2) == 3);
  CHECK(q_binomial(4, 2, 2) == 35);
  CHECK(q_binomial(7, 0, 5) == 1);
  CHECK(q_binomial(3, 4, 2) == 0);
  CHECK(gl_order(2, 2) == 6);
  CHECK(gl_order(3, 2) == 168);
  CHECK(mu(3, 2) == -8);
}

TEST_CASE("q-binomials count subspaces") {
  for (int q : {2, 3})
    for (int n = 0; n <= 5; ++n)
      for (int m = 0; m <= n; ++m)
        CHECK(BigInt(static_cast<long>(enumerate_subspaces(Field::get(q), n, m).size())) == q_binomial(n, m, q));
}

TEST_CASE("q-Pascal") {
  for (long q : {2, 3, 4, 5})
    for (int n = 1; n <= 12; ++n)
      for (int m = 1; m <= n; ++m)
        CHECK(q_binomial(n, m, q) - q_binomial(n - 1, m - 1, q) == int_pow(q, m) * q_binomial(n - 1, m, q));
}

TEST_CASE("q-binomial theorem") {
  for (long q : {2, 3, 5})
    for (long t : {1, 2, 3})
      for (int n = 0; n <= 8; ++n) {
        BigInt lhs = 1, rhs = 0;
        for (int j = 0; j < n; ++j) lhs *= 1 + int_pow(q, j) * t;
        for (int j = 0; j <= n; ++j)
          rhs += int_pow(q, static_cast<unsigned long>(j * (j - 1) / 2)) * q_binomial(n, j, q) * int_pow(t, j);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("sum identity") {
  CHECK(sum_identity_check(1, 1, 2));
  CHECK(sum_identity_lhs(1, 2, 2) == 0);
  CHECK(sum_identity_check(2, 4, 3));
  for (long q : {2, 3, 5})
    for (int r = 1; r <= 6; ++r)
      for (int t = 1; t <= r; ++t) CHECK(sum_identity_check(t, r, q));
}

TEST_CASE("strips") {
  CHECK(is_horizontal_strip(Partition({2, 1}), Partition({1})));
  CHECK(is_horizontal_strip(Partition({2, 1}), Partition({2, 1})));
  CHECK(is_vertical_strip(Partition({2, 1}), Partition({2, 1})));
  CHECK_FALSE(is_horizontal_strip(Partition({2, 2}), Partition({1})));
  CHECK(is_vertical_strip(Partition({2, 2}), Partition({1, 1})));
  CHECK_FALSE(is_horizontal_strip(Partition({1}), Partition({2})));
}

TEST_CASE("strip operators") {
  const PartitionFn a = op_A(delta(Partition(), 6));
  for (int k = 0; k <= 6; ++k)
    for (const Partition& p : partitions(k)) CHECK(a(p) == (p.length() <= 1 ? 1 : 0));
  CHECK(op_A(delta(Partition({1}), 4))(Partition({2, 1})) == 1);
  CHECK(op_B(op_A(delta(Partition(), 8))) == delta(Partition(), 8));

  // A and B are inverse on every point mass of size <= 8.
  for (int k = 0; k <= 8; ++k)
    for (const Partition& p : partitions(k)) {
      CHECK(op_A(op_B(delta(p, 8))) == delta(p, 8));
      CHECK(op_B(op_A(delta(p, 8))) == delta(p, 8));
    }
  CHECK_THROWS_AS(PartitionFn(2).set(Partition({3}), 1), InvalidArgument);
}

}
