#pragma once

// Straightening: rewriting column tableaux in the semistandard basis of the
// Schur module S^lambda V, modulo column antisymmetry and the exchange
// (Pluecker) relations.

#include "youngflat/exterior.hpp"
#include "youngflat/shapes.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace youngflat {

/// Element of S^lambda V in the semistandard basis.
class SchurVector {
 public:
  SchurVector() = default;
  explicit SchurVector(Partition shape) : shape_(std::move(shape)) {}

  /// A semistandard tableau with coefficient one.
  static SchurVector basis(const ColumnTableau& ssyt);

  const Partition& shape() const { return shape_; }
  const Combination& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of a semistandard filling (zero when absent).
  Rational coefficient(const Filling& ssyt) const;

  /// Adds coeff times a semistandard filling.
  void add(const Filling& ssyt, const Rational& coeff) { accumulate(terms_, ssyt, coeff); }
  void add(const Combination& terms, const Rational& scale) { accumulate(terms_, terms, scale); }

  /// The same vector viewed in X^{lambda*} V.
  XVector lift() const;

  SchurVector& operator+=(const SchurVector& other);
  SchurVector& operator-=(const SchurVector& other);
  SchurVector& operator*=(const Rational& scale);
  friend SchurVector operator+(SchurVector a, const SchurVector& b) { return a += b; }
  friend SchurVector operator-(SchurVector a, const SchurVector& b) { return a -= b; }
  friend SchurVector operator*(const Rational& s, SchurVector a) { return a *= s; }
  friend bool operator==(const SchurVector& a, const SchurVector& b);

 private:
  Partition shape_;
  Combination terms_;
};

std::string to_string(const SchurVector& v);

/// All exchange tableaux E^B_C(T): C is a set of boxes (1-based rows) of column
/// j, B runs over the |C|-subsets of column i. Contents are swapped keeping
/// vertical order inside B and inside C; columns are not re-sorted.
std::vector<ColumnTableau> exchange_set(const ColumnTableau& t, int i, int j, std::span<const int> rowsC);

/// Memoizing straightening engine. Not thread safe; use one per thread.
class Straightener {
 public:
  /// v must live in X^{lambda*} V for a partition lambda (trailing empty
  /// columns are allowed and dropped).
  SchurVector straighten(const XVector& v);

  /// Semistandard expansion of one canonical filling (strictly increasing
  /// columns) of the given column shape. The reference stays valid for the
  /// lifetime of the engine.
  const Combination& expand(const Composition& shape, const Filling& canonical);

  std::size_t cache_size() const;
  void clear() { cache_.clear(); }

 private:
  using Cache = std::unordered_map<Filling, Combination, FillingHash>;

  const Combination& expand(const Composition& shape, const std::vector<int>& offsets, Cache& cache,
                            const Filling& canonical);

  std::map<Composition, Cache> cache_;
};

/// Straightens with a per-thread engine.
SchurVector straighten(const XVector& v);
Straightener& thread_straightener();

}  // namespace youngflat
