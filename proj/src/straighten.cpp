#include "youngflat/straighten.hpp"

#include "youngflat/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace youngflat {

namespace {

// Sign of sorting filling[start, start+len), or 0 on a repeated entry.
int sort_range(Filling& filling, int start, int len) {
  int sign = 1;
  for (int a = start + 1; a < start + len; ++a) {
    const Entry value = filling[a];
    int b = a;
    while (b > start && filling[b - 1] > value) {
      filling[b] = filling[b - 1];
      --b;
      sign = -sign;
    }
    if (b > start && filling[b - 1] == value) return 0;
    filling[b] = value;
  }
  return sign;
}

// Calls visit(subset) for every k-subset of {0, ..., n-1}, in increasing order.
template <typename Visit>
void for_each_subset(int n, int k, Visit&& visit) {
  if (k > n) return;
  std::vector<int> subset(k);
  for (int t = 0; t < k; ++t) subset[t] = t;
  while (true) {
    visit(std::as_const(subset));
    int t = k - 1;
    while (t >= 0 && subset[t] == n - k + t) --t;
    if (t < 0) return;
    ++subset[t];
    for (int u = t + 1; u < k; ++u) subset[u] = subset[u - 1] + 1;
  }
}

bool is_partition_shape(const Composition& shape) {
  for (std::size_t c = 1; c < shape.size(); ++c)
    if (shape[c] > shape[c - 1]) return false;
  return true;
}

}  // namespace

SchurVector SchurVector::basis(const ColumnTableau& ssyt) {
  if (!is_semistandard(ssyt)) throw Error(ErrorKind::ShapeError, "not a semistandard tableau: " + to_string(ssyt));
  SchurVector v(from_column_lengths(ssyt.shape));
  v.add(ssyt.entries, Rational(1));
  return v;
}

Rational SchurVector::coefficient(const Filling& ssyt) const {
  auto it = terms_.find(ssyt);
  return it == terms_.end() ? Rational(0) : it->second;
}

XVector SchurVector::lift() const {
  XVector v(shape_.column_lengths());
  for (const auto& [filling, coeff] : terms_) v.add(filling, coeff);
  return v;
}

SchurVector& SchurVector::operator+=(const SchurVector& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) shape_ = other.shape_;
  if (shape_ != other.shape_) throw Error(ErrorKind::DimensionMismatch, "adding Schur vectors of different shapes");
  accumulate(terms_, other.terms_, Rational(1));
  return *this;
}

SchurVector& SchurVector::operator-=(const SchurVector& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) shape_ = other.shape_;
  if (shape_ != other.shape_) throw Error(ErrorKind::DimensionMismatch, "subtracting Schur vectors of different shapes");
  accumulate(terms_, other.terms_, Rational(-1));
  return *this;
}

SchurVector& SchurVector::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_) coeff *= scale;
  return *this;
}

bool operator==(const SchurVector& a, const SchurVector& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.shape_ == b.shape_ && a.terms_ == b.terms_;
}

std::string to_string(const SchurVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream out;
  const Composition shape = v.shape().column_lengths();
  bool first = true;
  for (const auto& [filling, coeff] : v.terms()) {
    if (!first) out << " + ";
    first = false;
    out << coeff.str() << "*" << to_string(ColumnTableau{shape, filling});
  }
  return out.str();
}

std::vector<ColumnTableau> exchange_set(const ColumnTableau& t, int i, int j, std::span<const int> rowsC) {
  if (i == j || i < 1 || j < 1 || i > t.columns() || j > t.columns())
    throw Error(ErrorKind::ShapeError, "exchange columns out of range");
  const int lenI = t.shape[i - 1];
  const int lenJ = t.shape[j - 1];
  std::vector<int> rows(rowsC.begin(), rowsC.end());
  std::sort(rows.begin(), rows.end());
  if (std::adjacent_find(rows.begin(), rows.end()) != rows.end())
    throw Error(ErrorKind::ShapeError, "exchange rows must be distinct");
  for (int r : rows)
    if (r < 1 || r > lenJ) throw Error(ErrorKind::ShapeError, "exchange row out of range");
  const int size = static_cast<int>(rows.size());
  if (size > lenI) throw Error(ErrorKind::ShapeError, "exchange set larger than the source column");

  const std::vector<int> offsets = column_offsets(t.shape);
  std::vector<ColumnTableau> out;
  for_each_subset(lenI, size, [&](const std::vector<int>& subsetB) {
    ColumnTableau e = t;
    for (int q = 0; q < size; ++q) {
      const int boxB = offsets[i - 1] + subsetB[q];
      const int boxC = offsets[j - 1] + rows[q] - 1;
      std::swap(e.entries[boxB], e.entries[boxC]);
    }
    out.push_back(std::move(e));
  });
  return out;
}

std::size_t Straightener::cache_size() const {
  std::size_t total = 0;
  for (const auto& [shape, cache] : cache_) total += cache.size();
  return total;
}

const Combination& Straightener::expand(const Composition& shape, const Filling& canonical) {
  if (!is_partition_shape(shape)) throw Error(ErrorKind::ShapeError, "column lengths must be weakly decreasing");
  const std::vector<int> offsets = column_offsets(shape);
  return expand(shape, offsets, cache_[shape], canonical);
}

const Combination& Straightener::expand(const Composition& shape, const std::vector<int>& offsets, Cache& cache,
                                        const Filling& canonical) {
  if (auto it = cache.find(canonical); it != cache.end()) return it->second;

  // Leftmost pair of adjacent columns with a row descent, topmost such row.
  int column = -1, row = -1;
  for (int c = 0; c + 1 < static_cast<int>(shape.size()) && column < 0; ++c) {
    for (int r = 0; r < shape[c + 1]; ++r) {
      if (canonical[offsets[c] + r] > canonical[offsets[c + 1] + r]) {
        column = c;
        row = r;
        break;
      }
    }
  }

  Combination result;
  if (column < 0) {
    result.emplace(canonical, Rational(1));
  } else {
    // Exchange relation: T equals the sum of the tableaux obtained by swapping
    // the top row+1 boxes of the right column with every equally large subset
    // of the left column. Every such tableau is strictly larger than T in the
    // order "compare the rightmost differing column from the bottom", so the
    // recursion terminates.
    const int size = row + 1;
    const int left = offsets[column];
    const int right = offsets[column + 1];
    for_each_subset(shape[column], size, [&](const std::vector<int>& subsetB) {
      Filling next = canonical;
      for (int q = 0; q < size; ++q) std::swap(next[left + subsetB[q]], next[right + q]);
      const int signLeft = sort_range(next, left, shape[column]);
      if (signLeft == 0) return;
      const int signRight = sort_range(next, right, shape[column + 1]);
      if (signRight == 0) return;
      const Combination& sub = expand(shape, offsets, cache, next);
      accumulate(result, sub, Rational(signLeft * signRight));
    });
  }
  return cache.emplace(canonical, std::move(result)).first->second;
}

SchurVector Straightener::straighten(const XVector& v) {
  const Composition shape = trim(v.shape());
  if (!is_partition_shape(shape)) throw Error(ErrorKind::ShapeError, "column lengths must be weakly decreasing");
  SchurVector out(from_column_lengths(shape));
  if (v.is_zero()) return out;
  const std::vector<int> offsets = column_offsets(shape);
  Cache& cache = cache_[shape];
  for (const auto& [filling, coeff] : v.terms()) out.add(expand(shape, offsets, cache, filling), coeff);
  return out;
}

Straightener& thread_straightener() {
  thread_local Straightener engine;
  return engine;
}

SchurVector straighten(const XVector& v) { return thread_straightener().straighten(v); }

}  // namespace youngflat
