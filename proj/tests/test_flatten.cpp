#include "youngflat/exactla.hpp"
#include "youngflat/flatten.hpp"
#include "youngflat/glaction.hpp"

#include "oracles.hpp"
#include "test_helpers.hpp"

#include <random>
#include <sstream>

using namespace youngflat;

namespace {

RationalMatrix M(std::initializer_list<std::initializer_list<Rational>> rows) {
  RationalMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

const RationalMatrix half = M({{0, make_rational(1, 2), 0}, {0, 0, 1}});

}  // namespace

TEST(Embed, Examples) {
  using Words = std::vector<std::pair<Integer, std::vector<Entry>>>;
  EXPECT_EQ(embed_symmetric({1, 1}), (Words{{1, {1, 2}}, {1, {2, 1}}}));
  EXPECT_EQ(embed_symmetric({2, 0}), (Words{{2, {1, 1}}}));
  EXPECT_EQ(embed_symmetric({1}), (Words{{1, {1}}}));
  const Words mixed = embed_symmetric({2, 1});
  ASSERT_EQ(mixed.size(), 3u);
  for (const auto& [c, word] : mixed) EXPECT_EQ(c, 2);
}

TEST(Flattening, SingleBoxGoldenMatrices) {
  const FlatteningMatrix a = flattening_matrix(Partition{2}, Partition{2, 1}, parse_polynomial(2, "a"), 2);
  EXPECT_TRUE(a.entries == half);
  const FlatteningMatrix b = flattening_matrix(Partition{2}, Partition{2, 1}, parse_polynomial(2, "b"), 2);
  EXPECT_TRUE(b.entries == M({{-1, 0, 0}, {0, make_rational(-1, 2), 0}}));
  EXPECT_EQ(a.cols, enumerate_ssyt(Partition{2}, 2));
  EXPECT_EQ(a.rows, enumerate_ssyt(Partition{2, 1}, 2));
}

TEST(Flattening, EndToEndRank) {
  const FlatteningMatrix f = flattening_matrix(Partition{4, 1}, Partition{5, 2, 1}, parse_polynomial(3, "a^3+b*c^2"), 3);
  EXPECT_EQ(f.entries.rows(), 24);
  EXPECT_EQ(f.entries.cols(), 24);
  EXPECT_EQ(rank(f.entries), 18u);
}

TEST(Flattening, ZeroPolynomial) {
  const FlatteningMatrix f = flattening_matrix(Partition{2}, Partition{3, 1}, Polynomial(3), 3);
  EXPECT_EQ(f.entries.rows(), static_cast<Eigen::Index>(dim_schur(Partition{3, 1}, 3)));
  EXPECT_TRUE(f.entries.isZero());
  EXPECT_TRUE(boxfill_matrix(Partition{2}, Partition{3, 1}, Polynomial(3), 3).entries.isZero());
}

TEST(Flattening, Errors) {
  const Polynomial a = parse_polynomial(2, "a");
  expect_error(ErrorKind::DegreeMismatch, [&] { flattening_matrix(Partition{2}, Partition{3, 1}, a, 2); });
  expect_error(ErrorKind::NotAStrip,
               [&] { flattening_matrix(Partition{1}, Partition{1, 1, 1}, parse_polynomial(3, "a*b"), 3); });
  expect_error(ErrorKind::ShapeError, [&] { flattening_matrix(Partition{1, 1}, Partition{1, 1, 1}, a, 2); });
  expect_error(ErrorKind::DimensionMismatch,
               [&] { flattening_matrix(Partition{1}, Partition{2}, parse_polynomial(3, "a"), 2); });
}

TEST(Flattening, Linear) {
  std::mt19937 rng(21);
  const Partition lambda{2, 1}, mu{3, 2};
  for (int trial = 0; trial < 4; ++trial) {
    const Polynomial p = oracle::random_polynomial(rng, 3, 2, 3, true);
    const Polynomial q = oracle::random_polynomial(rng, 3, 2, 3, true);
    const Rational c = make_rational(trial - 2, 3);
    const RationalMatrix fp = flattening_matrix(lambda, mu, p, 3).entries;
    const RationalMatrix fq = flattening_matrix(lambda, mu, q, 3).entries;
    EXPECT_TRUE(flattening_matrix(lambda, mu, p + q, 3).entries == RationalMatrix(fp + fq));
    EXPECT_TRUE(flattening_matrix(lambda, mu, c * p, 3).entries == RationalMatrix(c * fp));
  }
}

TEST(Flattening, Equivariant) {
  std::mt19937 rng(22);
  const std::vector<std::pair<Partition, Partition>> cases = {
      {Partition{1}, Partition{3, 1}}, {Partition{2, 1}, Partition{3, 2}}, {Partition{2, 1}, Partition{3, 2, 1}}};
  for (const auto& [lambda, mu] : cases) {
    const int d = mu.size() - lambda.size();
    const GroupElement g = oracle::random_invertible(rng, 3);
    const Polynomial p = oracle::random_polynomial(rng, 3, d, 3);
    const RationalMatrix f = flattening_matrix(lambda, mu, p, 3).entries;
    const RationalMatrix fg = flattening_matrix(lambda, mu, act_poly(g, p), 3).entries;
    const RationalMatrix lhs = rep_matrix(g, mu, 3) * f;
    const RationalMatrix rhs = fg * rep_matrix(g, lambda, 3);
    EXPECT_TRUE(lhs == rhs) << to_string(lambda) << " -> " << to_string(mu);
    EXPECT_EQ(rank(f), rank(fg));
  }
}

TEST(Flattening, PowerOfFirstVariableIsNonzero) {
  for (const auto& [lambda, mu] :
       std::vector<std::pair<Partition, Partition>>{{{}, {3}}, {{2, 1}, {4, 2, 1}}, {{3, 3}, {4, 3, 2}}}) {
    const int d = mu.size() - lambda.size();
    EXPECT_FALSE(flattening_matrix(lambda, mu, Polynomial::power(3, 1, d), 3).entries.isZero());
  }
}

TEST(Flattening, IndependentOfThreadsAndOrder) {
  const Partition lambda{2, 1}, mu{4, 2, 1};
  const Polynomial p = parse_polynomial(3, "a^4+b^2*c^2-2*a*b*c^2");
  const RationalMatrix base = flattening_matrix(lambda, mu, p, 3).entries;
  FlattenOptions threaded;
  threaded.threads = 3;
  EXPECT_TRUE(flattening_matrix(lambda, mu, p, 3, threaded).entries == base);
  for (const std::vector<int>& order : admissible_orders(lambda, mu)) {
    FlattenOptions options;
    options.column_order = order;
    const auto c = proportionality(base, flattening_matrix(lambda, mu, p, 3, options).entries);
    ASSERT_TRUE(c.has_value());
    EXPECT_NE(*c, 0);
  }
}

TEST(Boxfill, Tables) {
  EXPECT_TRUE(boxfill_matrix(Partition{2}, Partition{2, 1}, parse_polynomial(2, "a"), 2).entries ==
              M({{0, 0, 0}, {0, 0, -1}}));
  EXPECT_TRUE(boxfill_matrix(Partition{2}, Partition{2, 1}, parse_polynomial(2, "b"), 2).entries ==
              M({{1, 0, 0}, {0, 1, 0}}));
}

TEST(Boxfill, NotEquivariant) {
  GroupElement g(2, 2);
  g << 0, 1, 1, 0;
  const RationalMatrix fill = boxfill_matrix(Partition{2}, Partition{2, 1}, parse_polynomial(2, "a"), 2).entries;
  const RationalMatrix moved = rep_matrix(g, Partition{2, 1}, 2) * fill * inverse(rep_matrix(g, Partition{2}, 2));
  EXPECT_TRUE(moved == M({{1, 0, 0}, {0, 0, 0}}));
  EXPECT_FALSE(moved == boxfill_matrix(Partition{2}, Partition{2, 1}, parse_polynomial(2, "b"), 2).entries);
}

TEST(WaringBound, Examples) {
  const Partition lambda{4, 1}, mu{5, 2, 1};
  EXPECT_EQ(waring_bound(lambda, mu, Polynomial::power(3, 1, 3), 1, 3), 1u);

  // Denominator evaluated separately: every column is psi on the all-a word,
  // times the 3! orderings, without the word trie or the step cache.
  const PieriProblem problem(lambda, mu, 3);
  const std::vector<ColumnTableau> rows = enumerate_ssyt(mu, 3), cols = enumerate_ssyt(lambda, 3);
  RationalMatrix power(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  const std::vector<Entry> word{1, 1, 1};
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const SchurVector image = psi(problem, word, SchurVector::basis(cols[c]));
    for (std::size_t r = 0; r < rows.size(); ++r)
      power(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = Rational(6) * image.coefficient(rows[r].entries);
  }
  const std::size_t denominator = oracle::naive_rank(power);
  ASSERT_GT(denominator, 0u);
  EXPECT_TRUE(power == flattening_matrix(lambda, mu, Polynomial::power(3, 1, 3), 3).entries);
  const std::size_t expected = (18 + denominator - 1) / denominator;
  EXPECT_EQ(waring_bound(lambda, mu, parse_polynomial(3, "a^3+b*c^2"), 1, 3), expected);

  expect_error(ErrorKind::DegenerateInput, [&] { waring_bound(lambda, mu, Polynomial(3), 1, 3); });
  expect_error(ErrorKind::IndexError,
               [&] { waring_bound(lambda, mu, parse_polynomial(3, "a^3+b*c^2"), 4, 3); });
}

TEST(MatrixText, RoundTrip) {
  std::mt19937 rng(23);
  RationalMatrix m = oracle::random_matrix(rng, 4, 6, 9);
  m(0, 0) = make_rational(-7, 3);
  m(3, 5) = make_rational(22, 9);
  std::stringstream buffer;
  write_matrix(buffer, m);
  EXPECT_TRUE(read_matrix(buffer) == m);

  std::stringstream small;
  write_matrix(small, M({{make_rational(1, 2), 0}, {-3, 1}}));
  EXPECT_EQ(small.str(), "2 2\n1/2 0\n-3 1\n");
}

TEST(MatrixText, RejectsMalformed) {
  for (const char* text : {"", "2\n", "1 2\n1\n", "1 2\n1 2 3\n", "1 1\nx\n", "1 1\n1/0\n", "1 1\n1/\n", "2 1\n1\n"}) {
    std::istringstream in(text);
    expect_error(ErrorKind::FormatError, [&] { read_matrix(in); });
  }
}
