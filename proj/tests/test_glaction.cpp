#include "youngflat/exactla.hpp"
#include "youngflat/glaction.hpp"

#include "oracles.hpp"
#include "test_helpers.hpp"

#include <random>

using namespace youngflat;

namespace {

GroupElement swap2() {
  GroupElement g(2, 2);
  g << 0, 1, 1, 0;
  return g;
}

}  // namespace

TEST(ActPoly, Examples) {
  EXPECT_EQ(act_poly(swap2(), parse_polynomial(2, "a^2*b")), parse_polynomial(2, "b^2*a"));
  const Polynomial p = parse_polynomial(3, "a^3+b*c^2-1/2*a*b*c");
  EXPECT_EQ(act_poly(GroupElement::Identity(3, 3), p), p);
  EXPECT_EQ(act_poly(Rational(2) * GroupElement::Identity(3, 3), p), Rational(8) * p);
  // x_1 -> x_1 + x_2 sends x_1^2 to (x_1 + x_2)^2.
  GroupElement shear(2, 2);
  shear << 1, 0, 1, 1;
  EXPECT_EQ(act_poly(shear, parse_polynomial(2, "a^2")), parse_polynomial(2, "a^2+2*a*b+b^2"));
}

TEST(ActPoly, IsAnAction) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const GroupElement g = oracle::random_invertible(rng, 3), h = oracle::random_invertible(rng, 3);
    const Polynomial p = oracle::random_polynomial(rng, 3, 3, 4);
    EXPECT_EQ(act_poly(GroupElement(g * h), p), act_poly(g, act_poly(h, p)));
  }
}

TEST(RepMatrix, Examples) {
  EXPECT_TRUE(rep_matrix(GroupElement::Identity(3, 3), Partition{2, 1}, 3) == RationalMatrix::Identity(8, 8));
  std::mt19937 rng(12);
  const GroupElement g = oracle::random_invertible(rng, 3);
  EXPECT_TRUE(rep_matrix(g, Partition{1}, 3) == g);
  // Basis [1,1], [1,2], [2,2]: the swap exchanges the outer two.
  RationalMatrix expected(3, 3);
  expected << 0, 0, 1, 0, 1, 0, 1, 0, 0;
  EXPECT_TRUE(rep_matrix(swap2(), Partition{2}, 2) == expected);
  // Determinant on a full column.
  EXPECT_TRUE(rep_matrix(swap2(), Partition{1, 1}, 2) == RationalMatrix::Constant(1, 1, Rational(-1)));
  expect_error(ErrorKind::ShapeError, [] { rep_matrix(swap2(), Partition{1, 1, 1}, 2); });
}

TEST(RepMatrix, Multiplicative) {
  std::mt19937 rng(13);
  const std::vector<std::pair<Partition, int>> cases = {
      {Partition{2}, 2}, {Partition{2, 1}, 2}, {Partition{2, 1}, 3}, {Partition{3, 1}, 2}, {Partition{2, 2}, 3}};
  for (const auto& [lambda, n] : cases) {
    const GroupElement g = oracle::random_invertible(rng, n), h = oracle::random_invertible(rng, n);
    const RationalMatrix lhs = rep_matrix(GroupElement(g * h), lambda, n);
    const RationalMatrix rhs = rep_matrix(g, lambda, n) * rep_matrix(h, lambda, n);
    EXPECT_TRUE(lhs == rhs) << to_string(lambda) << " n=" << n;
  }
}

TEST(RepMatrix, InvertibleForInvertibleElements) {
  std::mt19937 rng(14);
  for (const Partition& lambda : {Partition{3}, Partition{2, 1}, Partition{1, 1, 1}, Partition{3, 2}}) {
    const GroupElement g = oracle::random_invertible(rng, 3);
    const RationalMatrix m = rep_matrix(g, lambda, 3);
    EXPECT_EQ(static_cast<std::size_t>(m.rows()), dim_schur(lambda, 3));
    EXPECT_EQ(rank(m), static_cast<std::size_t>(m.rows()));
  }
}

TEST(ActXVector, CommutesWithStraightening) {
  std::mt19937 rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    const XVector v = oracle::random_xvector(rng, {2, 1}, 3, 4);
    const GroupElement g = oracle::random_invertible(rng, 3);
    EXPECT_EQ(straighten(act(g, v)), act(g, straighten(v)));
  }
}
