// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "youngflat/exactla.hpp"
#include "youngflat/flatten.hpp"
#include "youngflat/glaction.hpp"

#include "cli_runner.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace youngflat;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

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

std::vector<std::pair<Partition, Partition>> strips(int maxSize, int n) {
  std::vector<std::pair<Partition, Partition>> out;
  for (int d = 1; d <= maxSize; ++d)
    for (const Partition& mu : partitions_of(d)) {
      if (mu.length() > n) continue;
      for (int e = 0; e < d; ++e)
        for (const Partition& lambda : partitions_of(e))
          if (is_horizontal_strip(lambda, mu)) out.emplace_back(lambda, mu);
    }
  return out;
}

Outcome end_to_end() {
  const auto start = Clock::now();
  const CliResult r = run_cli("3 '[5,2,1]' '[1,2,3]' 'a^3+b*c^2'");
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << "exit " << r.exit << ", output '" << r.out.substr(0, r.out.find('\n')) << "', " << elapsed << " s";
  return {r.exit == 0 && r.out == "rank: 18\n" && elapsed <= 60.0, detail.str()};
}

Outcome golden_matrices() {
  const RationalMatrix a = flattening_matrix(Partition{2}, Partition{2, 1}, parse_polynomial(2, "a"), 2).entries;
  const RationalMatrix b = flattening_matrix(Partition{2}, Partition{2, 1}, parse_polynomial(2, "b"), 2).entries;
  const bool okA = a == M({{0, make_rational(1, 2), 0}, {0, 0, 1}});
  const bool okB = b == M({{-1, 0, 0}, {0, make_rational(-1, 2), 0}});
  return {okA && okB, std::string("F(x1) ") + (okA ? "exact" : "differs") + ", F(x2) " + (okB ? "exact" : "differs")};
}

Outcome boxfill_counterexample() {
  const Partition lambda{2}, mu{2, 1};
  const RationalMatrix fa = boxfill_matrix(lambda, mu, parse_polynomial(2, "a"), 2).entries;
  const RationalMatrix fb = boxfill_matrix(lambda, mu, parse_polynomial(2, "b"), 2).entries;
  const bool tables = fa == M({{0, 0, 0}, {0, 0, -1}}) && fb == M({{1, 0, 0}, {0, 1, 0}});
  GroupElement g(2, 2);
  g << 0, 1, 1, 0;
  const RationalMatrix moved = rep_matrix(g, mu, 2) * fa * inverse(rep_matrix(g, lambda, 2));
  const bool transformed = moved == M({{1, 0, 0}, {0, 0, 0}});
  const bool differs = !(moved == fb);
  return {tables && transformed && differs, std::string("tables ") + (tables ? "exact" : "differ") +
                                                ", transformed " + (transformed ? "exact" : "differs") +
                                                (differs ? ", differs from F(x2)" : ", equals F(x2)")};
}

Outcome commutator_suite() {
  std::mt19937 rng(404);
  int vectors = 0, checks = 0, failures = 0, zeroChecks = 0;
  while (vectors < 600) {
    const int n = 1 + vectors % 3;
    const int columns = 3 + vectors % 2;
    std::uniform_int_distribution<int> len(0, n);
    Composition shape(columns);
    int boxes = 0;
    for (int& c : shape) boxes += (c = len(rng));
    if (boxes == 0 || boxes > 6) continue;
    const XVector v = oracle::random_xvector(rng, shape, n, 3);
    ++vectors;
    for (int i = 1; i <= columns; ++i)
      for (int j = 1; j <= columns; ++j) {
        if (i == j || shape[i - 1] == 0) continue;
        for (int k = 1; k <= columns; ++k)
          for (int l = 1; l <= columns; ++l) {
            if (k == l || shape[k - 1] == 0) continue;
            ++checks;
            if (!oracle::commutator_rule_holds(v, i, j, k, l)) ++failures;
          }
        if (shape[j - 1] != 0) continue;
        ++zeroChecks;
        if (!oracle::return_trip_holds(v, i, j)) ++failures;
        for (int k = 1; k <= columns; ++k) {
          if (k == i || k == j) continue;
          ++zeroChecks;
          if (!oracle::relay_holds(v, i, j, k)) ++failures;
        }
      }
  }
  std::ostringstream detail;
  detail << vectors << " vectors, " << checks << " commutators, " << zeroChecks << " empty-column identities, "
         << failures << " failures";
  return {failures == 0 && zeroChecks > 0, detail.str()};
}

Outcome equivariance_suite() {
  std::mt19937 rng(505);
  std::vector<std::pair<std::pair<Partition, Partition>, int>> pool;
  for (int n = 2; n <= 3; ++n)
    for (const auto& strip : strips(6, n)) {
      const int d = strip.second.size() - strip.first.size();
      if (d <= 3) pool.push_back({strip, n});
    }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int trials = 0, failures = 0, rankFailures = 0;
  for (; trials < 60; ++trials) {
    const auto& [strip, n] = pool[pick(rng)];
    const auto& [lambda, mu] = strip;
    const int d = mu.size() - lambda.size();
    const GroupElement g = oracle::random_invertible(rng, n);
    const Polynomial p = oracle::random_polynomial(rng, n, d, 3, true);
    const RationalMatrix f = flattening_matrix(lambda, mu, p, n).entries;
    const RationalMatrix fg = flattening_matrix(lambda, mu, act_poly(g, p), n).entries;
    if (!(RationalMatrix(rep_matrix(g, mu, n) * f) == RationalMatrix(fg * rep_matrix(g, lambda, n)))) ++failures;
    if (rank(f) != rank(fg)) ++rankFailures;
  }
  std::ostringstream detail;
  detail << trials << " (g, p) pairs, " << failures << " identity failures, " << rankFailures << " rank mismatches";
  return {failures == 0 && rankFailures == 0, detail.str()};
}

Outcome straightening_oracle() {
  int shapes = 0, tableaux = 0, generators = 0, failures = 0;
  for (int n = 1; n <= 3; ++n)
    for (int size = 1; size <= 6; ++size)
      for (const Partition& lambda : partitions_of(size)) {
        if (lambda.length() > n) continue;
        const oracle::RelationSpace brute(lambda, n);
        const Composition shape = lambda.column_lengths();
        ++shapes;
        if (!brute.codimension_matches()) ++failures;
        Straightener engine;
        for (const Filling& f : brute.fillings()) {
          XVector v(shape);
          v.add_unsorted(f, Rational(1));
          ++tableaux;
          if (!(engine.straighten(v) == brute.project(f))) ++failures;
        }
        for (const auto& generator : brute.generators()) {
          XVector v(shape);
          for (const auto& [f, c] : generator) v.add_unsorted(f, Rational(c));
          ++generators;
          if (!engine.straighten(v).is_zero()) ++failures;
        }
      }
  std::ostringstream detail;
  detail << shapes << " (shape, n) cases, " << tableaux << " tableaux, " << generators << " generators, " << failures
         << " failures";
  return {failures == 0, detail.str()};
}

Outcome nonzero_and_order() {
  int strips_ = 0, zero = 0, orderChecks = 0, orderFailures = 0;
  std::mt19937 rng(707);
  for (int n = 1; n <= 3; ++n)
    for (const auto& [lambda, mu] : strips(7, n)) {
      ++strips_;
      const PieriProblem problem(lambda, mu, n);
      const std::vector<Entry> ones(problem.degree(), 1);
      if (psi(problem, ones, SchurVector::basis(z_witness(lambda, n))).is_zero()) ++zero;

      const std::vector<std::vector<int>> orders = admissible_orders(lambda, mu);
      if (orders.size() < 2 || mu.size() > 6) continue;
      const Polynomial p = oracle::random_polynomial(rng, n, problem.degree(), 3);
      const RationalMatrix base = flattening_matrix(lambda, mu, p, n).entries;
      for (const std::vector<int>& order : orders) {
        FlattenOptions options;
        options.column_order = order;
        const auto c = proportionality(base, flattening_matrix(lambda, mu, p, n, options).entries);
        ++orderChecks;
        if (!c || *c == 0 || base.isZero()) ++orderFailures;
      }
    }
  std::ostringstream detail;
  detail << strips_ << " strips, " << zero << " zero images; " << orderChecks << " reordered chains, "
         << orderFailures << " not proportional";
  return {zero == 0 && orderFailures == 0 && orderChecks > 0, detail.str()};
}

Outcome performance() {
  auto start = Clock::now();
  const Partition muA{7, 5, 4, 3, 2};
  const std::vector<int> rowsA{1, 1, 2, 3, 4, 5, 5};
  const FlatteningMatrix fa = flattening_matrix(remove_boxes(muA, rowsA), muA, parse_polynomial(5, "x^7"), 5);
  const std::size_t rankA = rank(fa.entries);
  const double timeA = seconds_since(start);

  // Dense random cubic: every monomial gets a coefficient in +-1..9.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> magnitude(1, 9), sign(0, 1);
  Polynomial p(5);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b)
      for (int c = 0; a + b + c <= 3; ++c)
        for (int d = 0; a + b + c + d <= 3; ++d) {
          const int m = magnitude(rng);
          p.add_term({a, b, c, d, 3 - a - b - c - d}, Rational(sign(rng) ? m : -m));
        }
  start = Clock::now();
  const Partition muB{5, 3, 1};
  const std::vector<int> rowsB{1, 2, 3};
  const FlatteningMatrix fb = flattening_matrix(remove_boxes(muB, rowsB), muB, p, 5);
  const std::size_t rankB = rank(fb.entries);
  const double timeB = seconds_since(start);

  std::ostringstream detail;
  detail << "x^7: " << fa.entries.rows() << "x" << fa.entries.cols() << " rank " << rankA << " in " << timeA
         << " s (limit 120); random cubic: " << fb.entries.rows() << "x" << fb.entries.cols() << " rank " << rankB
         << " in " << timeB << " s (limit 60)";
  return {timeA <= 120.0 && timeB <= 60.0 && rankA > 0 && rankB > 0, detail.str()};
}

Outcome exact_rank_oracle() {
  std::mt19937 rng(909);
  std::uniform_int_distribution<int> dim(1, 12);
  int failures = 0, transposeFailures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = dim(rng), cols = dim(rng);
    RationalMatrix m;
    if (trial % 2 == 0) {
      m = oracle::random_matrix(rng, rows, cols, 9);
    } else {
      const int r = 1 + trial % std::min(rows, cols);
      m = oracle::random_matrix(rng, rows, r, 4) * oracle::random_matrix(rng, r, cols, 4);
    }
    if (trial % 3 == 0) m /= Rational(trial % 7 + 2);
    const std::size_t r = rank(m);
    if (r != oracle::naive_rank(m)) ++failures;
    if (r != rank(RationalMatrix(m.transpose()))) ++transposeFailures;
  }
  std::ostringstream detail;
  detail << "200 matrices, " << failures << " mismatches with naive elimination, " << transposeFailures
         << " transpose mismatches";
  return {failures == 0 && transposeFailures == 0, detail.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 end-to-end CLI rank", end_to_end},
      {"AC2 single-box golden matrices", golden_matrices},
      {"AC3 box-filling counterexample", boxfill_counterexample},
      {"AC4 commutator suite", commutator_suite},
      {"AC5 equivariance suite", equivariance_suite},
      {"AC6 straightening oracle", straightening_oracle},
      {"AC7 nonzeroness and order invariance", nonzero_and_order},
      {"AC8 performance", performance},
      {"AC9 exact rank oracle", exact_rank_oracle},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    const auto start = Clock::now();
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failed;
    std::printf("%s %s: %s [%.1f s]\n", outcome.pass ? "PASS" : "FAIL", name, outcome.detail.c_str(),
                seconds_since(start));
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
