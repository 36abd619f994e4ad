#pragma once

// Exact rank, proportionality and inversion for dense rational matrices.

#include "youngflat/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace youngflat {

/// Row-major integer matrix consumed (and destroyed) by the elimination.
struct IntegerRows {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  std::vector<Integer> entries;
};

/// Fraction-free elimination with full pivoting on the largest magnitude.
/// Independent blocks of the nonzero pattern are eliminated separately.
std::size_t integer_rank(IntegerRows m);

inline Integer scale_to_integer(const Integer& x, const Integer&) { return x; }
inline Integer scale_to_integer(const Rational& x, const Integer& lcm) {
  return boost::multiprecision::numerator(x) * (lcm / boost::multiprecision::denominator(x));
}
inline Integer denominator_of(const Integer&) { return Integer(1); }
inline Integer denominator_of(const Rational& x) { return boost::multiprecision::denominator(x); }

/// Exact rank over Q of an integer or rational matrix expression. Each row is
/// multiplied by the lcm of its denominators first.
template <typename Derived>
std::size_t rank(const Eigen::MatrixBase<Derived>& m) {
  IntegerRows work{m.rows(), m.cols(), {}};
  work.entries.reserve(static_cast<std::size_t>(m.rows() * m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Integer lcm(1);
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Integer den = denominator_of(m(i, j));
      if (den != 1) lcm = boost::multiprecision::lcm(lcm, den);
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j) work.entries.push_back(scale_to_integer(m(i, j), lcm));
  }
  return integer_rank(std::move(work));
}

/// The c with b == c * a, if any. Two zero matrices give 1.
std::optional<Rational> proportionality(const RationalMatrix& a, const RationalMatrix& b);

/// Gauss-Jordan inverse; DegenerateInput when m is singular.
RationalMatrix inverse(const RationalMatrix& m);

}  // namespace youngflat
