#pragma once

// Young flattenings F_{lambda,mu}(p): S^lambda V -> S^mu V, the box-filling
// variant, and the rank-quotient lower bound for border Waring rank.

#include "youngflat/pieri.hpp"
#include "youngflat/polynomial.hpp"

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace youngflat {

/// Full symmetrization of x^alpha: prod(alpha_i!) times each distinct word.
/// Words are 1-based variable indices in lexicographic order.
std::vector<std::pair<Integer, std::vector<Entry>>> embed_symmetric(const Exponent& alpha);

struct FlatteningMatrix {
  std::vector<ColumnTableau> rows;  // basis of S^mu V
  std::vector<ColumnTableau> cols;  // basis of S^lambda V
  RationalMatrix entries;
};

struct FlattenOptions {
  /// Worker threads for the columns; the result does not depend on it.
  int threads = 1;
  /// Admissible order of strip columns; leftmost first when empty.
  std::vector<int> column_order;
};

FlatteningMatrix flattening_matrix(const Partition& lambda, const Partition& mu, const Polynomial& p, int n,
                                   const FlattenOptions& options = {});

/// Adds alpha_i boxes labelled i to each basis tableau in every possible way
/// and straightens. Not GL-equivariant.
FlatteningMatrix boxfill_matrix(const Partition& lambda, const Partition& mu, const Polynomial& p, int n);

/// ceil(rank F(p) / rank F(x_variable^d)).
std::size_t waring_bound(const Partition& lambda, const Partition& mu, const Polynomial& p, int variable, int n,
                         const FlattenOptions& options = {});

/// Text format: "ROWS COLS" on the first line, then one line per row of
/// space-separated entries "num/den" (just "num" for integers).
void write_matrix(std::ostream& out, const RationalMatrix& m);
RationalMatrix read_matrix(std::istream& in);

}  // namespace youngflat
