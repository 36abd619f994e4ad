#pragma once

// Partition and composition combinatorics: conjugates, containment,
// horizontal strips, hook products and semistandard tableau enumeration.
//
// Row and column indices that appear in the public interface are 1-based,
// matching the usual (row, column) notation for Young diagrams.

#include "youngflat/rational.hpp"
#include "youngflat/tableau.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace youngflat {

/// Weakly decreasing list of positive integers. Trailing zeros are stripped on
/// construction; anything else that is not weakly decreasing is rejected.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Number of nonzero rows.
  int length() const { return static_cast<int>(parts_.size()); }
  /// Number of boxes.
  int size() const;
  bool empty() const { return parts_.empty(); }

  /// Length of row i (1-based); zero past the last row.
  int row(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  const std::vector<int>& parts() const { return parts_; }

  /// Column lengths, i.e. the conjugate partition as a composition.
  Composition column_lengths() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& p);

/// Partition with the given column lengths; the lengths must be weakly decreasing
/// (trailing zero columns are ignored).
Partition from_column_lengths(std::span<const int> columns);

Partition conjugate(const Partition& lambda);

/// lambda ⊆ mu as Young diagrams.
bool contains(const Partition& mu, const Partition& lambda);

bool is_horizontal_strip(const Partition& lambda, const Partition& mu);

/// Hook product D_J for a decreasing column sequence J ending at column k:
/// the product over the interior entries q of J of
/// colLengths[k] - colLengths[q] + q - k + 1. Columns are 1-based and columns
/// beyond the composition have length zero.
Integer hook_coefficient(std::span<const int> colLengths, int k, std::span<const int> J);

/// Deletes the last box of each listed row in turn. Every intermediate shape
/// must be a partition.
Partition remove_boxes(const Partition& mu, std::span<const int> rows);

struct BoxChain {
  /// shapes.front() == lambda, shapes.back() == mu.
  std::vector<Partition> shapes;
  /// 1-based column of the box added at each step.
  std::vector<int> columns;
};

/// Adds the boxes of the horizontal strip mu/lambda one at a time, leftmost first.
BoxChain box_addition_chain(const Partition& lambda, const Partition& mu);

/// Same as box_addition_chain but with the strip columns added in the given
/// order. Every intermediate shape must be a partition.
BoxChain box_addition_chain(const Partition& lambda, const Partition& mu,
                            std::span<const int> columnOrder);

/// All admissible orders in which the boxes of mu/lambda can be added.
std::vector<std::vector<int>> admissible_orders(const Partition& lambda, const Partition& mu);

/// Semistandard tableaux of shape lambda with entries in 1..n, sorted by
/// column reading word.
std::vector<ColumnTableau> enumerate_ssyt(const Partition& lambda, int n);

/// Weyl dimension formula for the Schur module S^lambda(C^n).
std::size_t dim_schur(const Partition& lambda, int n);

/// All partitions of d, in reverse lexicographic order.
std::vector<Partition> partitions_of(int d);

}  // namespace youngflat
