#pragma once

// Tensor products of exterior powers, one wedge factor per column, and the
// signed operators that move a single box from one column to another.
//
// A basis vector is a column tableau whose columns are strictly increasing.
// Concatenating the columns left to right gives one long wedge in which the
// entries of column c carry the block label c; signs of every operation below
// are transposition counts in that long wedge.

#include "youngflat/rational.hpp"
#include "youngflat/tableau.hpp"

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace youngflat {

/// Sparse rational combination of fillings; keys iterate in lexicographic order.
using Combination = std::map<Filling, Rational>;

/// Adds coeff * key, erasing the key if the coefficient cancels.
void accumulate(Combination& terms, const Filling& key, const Rational& coeff);
void accumulate(Combination& terms, const Combination& other, const Rational& scale);

/// Sorts every column of a filling in place. Returns the sign of the sorting
/// permutation, or 0 if some column repeats an entry.
int sort_columns(std::span<const int> shape, Filling& filling);

/// Sign-normalized form of a filling given as lists of column entries.
std::optional<std::pair<int, ColumnTableau>> normalize_filling(
    const std::vector<std::vector<int>>& columns);

/// Element of X^alpha V: a rational combination of column tableaux of one shape.
class XVector {
 public:
  XVector() = default;
  explicit XVector(Composition shape) : shape_(std::move(shape)) {}

  /// The basis vector of a (possibly unsorted) column tableau, with its sign.
  static XVector basis(const ColumnTableau& t);

  const Composition& shape() const { return shape_; }
  const Combination& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coeff times a filling whose columns are already strictly increasing.
  void add(const Filling& canonical, const Rational& coeff) { accumulate(terms_, canonical, coeff); }
  /// Adds coeff times an arbitrary filling, sorting columns first.
  void add_unsorted(Filling filling, const Rational& coeff);

  XVector& operator+=(const XVector& other);
  XVector& operator-=(const XVector& other);
  XVector& operator*=(const Rational& scale);

  friend XVector operator+(XVector a, const XVector& b) { return a += b; }
  friend XVector operator-(XVector a, const XVector& b) { return a -= b; }
  friend XVector operator*(const Rational& s, XVector a) { return a *= s; }

  /// Equal as elements of the outer direct sum: the zero vector of any shape
  /// equals the zero vector of any other.
  friend bool operator==(const XVector& a, const XVector& b);

 private:
  Composition shape_;
  Combination terms_;
};

/// Calls emit(filling, sign) once for every nonvanishing term of sigma_{i,j}
/// applied to one canonical filling; i and j are 0-based column indices.
template <typename Emit>
void move_box(std::span<const int> shape, std::span<const int> offsets, const Filling& filling, int i,
              int j, Emit&& emit);

/// sigma_{i,j}: moves one box from column i to column j (1-based, i != j),
/// summed over the boxes of column i.
XVector sigma(int i, int j, const XVector& v);

/// Strictly decreasing sequences from m down to k (1-based columns).
std::vector<std::vector<int>> decreasing_sequences(int m, int k);

/// sigma_J = sigma_{J1,J2} o ... o sigma_{J(p-1),Jp}; the rightmost factor acts first.
XVector sigma_path(std::span<const int> J, const XVector& v);

// ---------------------------------------------------------------------------

template <typename Emit>
void move_box(std::span<const int> shape, std::span<const int> offsets, const Filling& filling, int i,
              int j, Emit&& emit) {
  const int lenI = shape[i];
  const int lenJ = shape[j];
  if (lenI == 0) return;
  const int startI = offsets[i];
  const int startJ = offsets[j];
  int between = 0;
  if (j > i) {
    for (int c = i + 1; c < j; ++c) between += shape[c];
  } else {
    for (int c = j + 1; c < i; ++c) between += shape[c];
  }
  for (int a = 0; a < lenI; ++a) {
    const Entry value = filling[startI + a];
    // Position inside column j after sorting, and how far the box travels to
    // get there from the front (moving right) or back (moving left).
    int rank = 0;
    bool duplicate = false;
    for (int b = 0; b < lenJ; ++b) {
      const Entry other = filling[startJ + b];
      if (other == value) {
        duplicate = true;
        break;
      }
      if (other < value) ++rank;
    }
    if (duplicate) continue;
    int transpositions;
    if (j > i) {
      transpositions = (lenI - 1 - a) + between + rank;
    } else {
      transpositions = a + between + (lenJ - rank);
    }
    Filling out;
    out.reserve(filling.size());
    // Rebuild column by column; only columns i and j change.
    for (int c = 0; c < static_cast<int>(shape.size()); ++c) {
      const int start = offsets[c];
      if (c == i) {
        for (int b = 0; b < lenI; ++b)
          if (b != a) out.push_back(filling[start + b]);
      } else if (c == j) {
        for (int b = 0; b < rank; ++b) out.push_back(filling[start + b]);
        out.push_back(value);
        for (int b = rank; b < lenJ; ++b) out.push_back(filling[start + b]);
      } else {
        for (int b = 0; b < shape[c]; ++b) out.push_back(filling[start + b]);
      }
    }
    emit(std::move(out), (transpositions % 2) ? -1 : 1);
  }
}

}  // namespace youngflat
