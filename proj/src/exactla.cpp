#include "youngflat/exactla.hpp"

#include "youngflat/error.hpp"

#include <algorithm>
#include <numeric>

namespace youngflat {

namespace {

mpz_ptr raw(Integer& x) { return x.backend().data(); }
mpz_srcptr raw(const Integer& x) { return x.backend().data(); }

struct DisjointSets {
  std::vector<Eigen::Index> parent;
  explicit DisjointSets(Eigen::Index size) : parent(static_cast<std::size_t>(size)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  Eigen::Index find(Eigen::Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(Eigen::Index a, Eigen::Index b) { parent[find(a)] = find(b); }
};

// Bareiss elimination on a dense row-major block.
std::size_t bareiss_rank(std::vector<Integer>& a, Eigen::Index rows, Eigen::Index cols) {
  std::vector<Eigen::Index> rowOf(rows), colOf(cols);
  std::iota(rowOf.begin(), rowOf.end(), 0);
  std::iota(colOf.begin(), colOf.end(), 0);
  auto at = [&](Eigen::Index r, Eigen::Index c) -> Integer& { return a[r * cols + c]; };

  Integer previous(1), t;
  std::size_t rank = 0;
  const Eigen::Index steps = std::min(rows, cols);
  for (Eigen::Index k = 0; k < steps; ++k) {
    Eigen::Index bestR = -1, bestC = -1;
    for (Eigen::Index i = k; i < rows; ++i)
      for (Eigen::Index j = k; j < cols; ++j) {
        const Integer& x = at(rowOf[i], colOf[j]);
        if (mpz_sgn(raw(x)) == 0) continue;
        if (bestR < 0 || mpz_cmpabs(raw(x), raw(at(rowOf[bestR], colOf[bestC]))) > 0) {
          bestR = i;
          bestC = j;
        }
      }
    if (bestR < 0) break;
    std::swap(rowOf[k], rowOf[bestR]);
    std::swap(colOf[k], colOf[bestC]);
    ++rank;

    const Eigen::Index pr = rowOf[k];
    const Integer& pivot = at(pr, colOf[k]);
    for (Eigen::Index i = k + 1; i < rows; ++i) {
      const Eigen::Index r = rowOf[i];
      const Integer& factor = at(r, colOf[k]);
      const bool eliminate = mpz_sgn(raw(factor)) != 0;
      for (Eigen::Index j = k + 1; j < cols; ++j) {
        Integer& x = at(r, colOf[j]);
        const Integer& y = at(pr, colOf[j]);
        // x <- (pivot * x - factor * y) / previous
        if (mpz_sgn(raw(x)) != 0) mpz_mul(raw(x), raw(x), raw(pivot));
        if (eliminate && mpz_sgn(raw(y)) != 0) {
          mpz_mul(raw(t), raw(factor), raw(y));
          mpz_sub(raw(x), raw(x), raw(t));
        }
        if (mpz_sgn(raw(x)) != 0) mpz_divexact(raw(x), raw(x), raw(previous));
      }
      mpz_set_ui(raw(at(r, colOf[k])), 0);
    }
    previous = pivot;
  }
  return rank;
}

// Fraction-free echelon form built one row at a time. A row added after t
// pivots is transformed exactly as the Bareiss recurrence would have
// transformed it, so every stored entry is a minor of the input.
class RowEchelon {
 public:
  explicit RowEchelon(Eigen::Index cols) : cols_(cols), order_(static_cast<std::size_t>(cols)) {
    std::iota(order_.begin(), order_.end(), 0);
  }

  std::size_t rank() const { return pivots_.size(); }

  // Reduces row in place; returns true when it was independent and became a
  // new pivot row.
  bool insert(std::vector<Integer> row) {
    const Eigen::Index r = static_cast<Eigen::Index>(pivots_.size());
    for (Eigen::Index t = 0; t < r; ++t) {
      const Integer& d = pivots_[t];
      const Integer& previous = t ? pivots_[t - 1] : one_;
      const std::vector<Integer>& u = rows_[t];
      Integer& factor = row[order_[t]];
      const bool eliminate = mpz_sgn(raw(factor)) != 0;
      for (Eigen::Index q = t + 1; q < cols_; ++q) {
        const Eigen::Index j = order_[q];
        Integer& x = row[j];
        if (mpz_sgn(raw(x)) != 0) mpz_mul(raw(x), raw(x), raw(d));
        if (eliminate && mpz_sgn(raw(u[j])) != 0) mpz_submul(raw(x), raw(factor), raw(u[j]));
        if (mpz_sgn(raw(x)) != 0 && t > 0) mpz_divexact(raw(x), raw(x), raw(previous));
      }
      mpz_set_ui(raw(factor), 0);
    }
    Eigen::Index best = -1;
    for (Eigen::Index q = r; q < cols_; ++q) {
      const Integer& x = row[order_[q]];
      if (mpz_sgn(raw(x)) != 0 && (best < 0 || mpz_cmpabs(raw(x), raw(row[order_[best]])) > 0)) best = q;
    }
    if (best < 0) return false;
    std::swap(order_[r], order_[best]);
    pivots_.push_back(row[order_[r]]);
    rows_.push_back(std::move(row));
    return true;
  }

  // Integer basis of the right kernel, one vector per non-pivot column.
  std::vector<std::vector<Integer>> kernel() const {
    const Eigen::Index r = static_cast<Eigen::Index>(pivots_.size());
    std::vector<std::vector<Integer>> basis;
    Integer sum;
    for (Eigen::Index f = r; f < cols_; ++f) {
      std::vector<Integer> x(static_cast<std::size_t>(cols_));
      x[order_[f]] = r ? pivots_[r - 1] : one_;
      // Scaled by the leading minor, the solution is integral (Cramer), so
      // every division below is exact.
      for (Eigen::Index t = r - 1; t >= 0; --t) {
        mpz_mul(raw(sum), raw(rows_[t][order_[f]]), raw(x[order_[f]]));
        for (Eigen::Index q = t + 1; q < r; ++q) {
          const Eigen::Index j = order_[q];
          if (mpz_sgn(raw(rows_[t][j])) != 0) mpz_addmul(raw(sum), raw(rows_[t][j]), raw(x[j]));
        }
        mpz_neg(raw(sum), raw(sum));
        mpz_divexact(raw(x[order_[t]]), raw(sum), raw(pivots_[t]));
      }
      basis.push_back(std::move(x));
    }
    return basis;
  }

 private:
  Eigen::Index cols_;
  std::vector<Eigen::Index> order_;  // pivot columns first, in pivot order
  std::vector<Integer> pivots_;
  std::vector<std::vector<Integer>> rows_;
  Integer one_{1};
};

bool orthogonal(const std::vector<Integer>& a, Eigen::Index begin, Eigen::Index cols,
                const std::vector<Integer>& kernelVector, Integer& sum) {
  mpz_set_ui(raw(sum), 0);
  for (Eigen::Index j = 0; j < cols; ++j)
    if (mpz_sgn(raw(a[begin + j])) != 0 && mpz_sgn(raw(kernelVector[j])) != 0)
      mpz_addmul(raw(sum), raw(a[begin + j]), raw(kernelVector[j]));
  return mpz_sgn(raw(sum)) == 0;
}

// Rank of a block with many more rows than columns. Rows are inserted into a
// RowEchelon in order; once inserted rows start to turn out dependent, an
// exact kernel basis of the echelon form is computed and any row orthogonal
// to it is skipped, since it lies in the span already found.
std::size_t tall_rank(std::vector<Integer>& a, Eigen::Index rows, Eigen::Index cols) {
  RowEchelon echelon(cols);
  std::vector<std::vector<Integer>> kernel;
  int wasted = 0;
  Integer sum;
  for (Eigen::Index i = 0; i < rows && echelon.rank() < static_cast<std::size_t>(cols); ++i) {
    const Eigen::Index begin = i * cols;
    if (std::all_of(a.begin() + begin, a.begin() + begin + cols, [](const Integer& x) { return x == 0; })) continue;
    if (!kernel.empty() &&
        std::all_of(kernel.begin(), kernel.end(), [&](const auto& k) { return orthogonal(a, begin, cols, k, sum); }))
      continue;
    std::vector<Integer> row(std::make_move_iterator(a.begin() + begin),
                             std::make_move_iterator(a.begin() + begin + cols));
    if (!echelon.insert(std::move(row)) && ++wasted >= 4) {
      kernel = echelon.kernel();
      wasted = 0;
    }
  }
  return echelon.rank();
}

}  // namespace

std::size_t integer_rank(IntegerRows m) {
  const Eigen::Index rows = m.rows, cols = m.cols;
  if (rows == 0 || cols == 0) return 0;
  // Rows and columns are linked when they share a nonzero; the rank is the sum
  // over connected components.
  DisjointSets sets(rows + cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      if (m.entries[i * cols + j] != 0) sets.join(i, rows + j);

  std::vector<std::vector<Eigen::Index>> blockRows(rows + cols), blockCols(rows + cols);
  for (Eigen::Index i = 0; i < rows; ++i) blockRows[sets.find(i)].push_back(i);
  for (Eigen::Index j = 0; j < cols; ++j) blockCols[sets.find(rows + j)].push_back(j);

  std::size_t rank = 0;
  for (Eigen::Index b = 0; b < rows + cols; ++b) {
    const auto& br = blockRows[b];
    const auto& bc = blockCols[b];
    if (br.empty() || bc.empty()) continue;
    std::vector<Integer> block;
    block.reserve(br.size() * bc.size());
    for (Eigen::Index i : br)
      for (Eigen::Index j : bc) block.push_back(std::move(m.entries[i * cols + j]));
    auto bRows = static_cast<Eigen::Index>(br.size());
    auto bCols = static_cast<Eigen::Index>(bc.size());
    if (bCols > 2 * bRows) {
      std::vector<Integer> transposed(block.size());
      for (Eigen::Index i = 0; i < bRows; ++i)
        for (Eigen::Index j = 0; j < bCols; ++j) transposed[j * bRows + i] = std::move(block[i * bCols + j]);
      block.swap(transposed);
      std::swap(bRows, bCols);
    }
    rank += bRows > 2 * bCols ? tall_rank(block, bRows, bCols) : bareiss_rank(block, bRows, bCols);
  }
  return rank;
}

std::optional<Rational> proportionality(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "proportionality of matrices with different dimensions");
  std::optional<Rational> scale;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) {
        if (b(i, j) != 0) return std::nullopt;
        continue;
      }
      const Rational c = b(i, j) / a(i, j);
      if (!scale) scale = c;
      else if (*scale != c) return std::nullopt;
    }
  // Reached only when b vanishes wherever a does; a == 0 forces b == 0 here.
  return scale ? scale : Rational(1);
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  RationalMatrix work = m;
  RationalMatrix inv = RationalMatrix::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && work(p, k) == 0) ++p;
    if (p == n) throw Error(ErrorKind::DegenerateInput, "matrix is singular");
    work.row(k).swap(work.row(p));
    inv.row(k).swap(inv.row(p));
    const Rational scale = Rational(1) / work(k, k);
    work.row(k) *= scale;
    inv.row(k) *= scale;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || work(i, k) == 0) continue;
      const Rational f = work(i, k);
      work.row(i) -= f * work.row(k);
      inv.row(i) -= f * inv.row(k);
    }
  }
  return inv;
}

}  // namespace youngflat
