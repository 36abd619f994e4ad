#include "youngflat/shapes.hpp"

#include "youngflat/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace youngflat {

namespace {

int column_length(std::span<const int> columns, int c) {
  return c >= 1 && c <= static_cast<int>(columns.size()) ? columns[c - 1] : 0;
}

// Adds one box at the bottom of column c (1-based); throws unless the result is
// still a partition.
void add_box_to_column(Composition& columns, int c) {
  if (c < 1 || c > static_cast<int>(columns.size()) + 1)
    throw Error(ErrorKind::NotAStrip, "box column out of range");
  if (c == static_cast<int>(columns.size()) + 1) columns.push_back(0);
  const int newLength = columns[c - 1] + 1;
  if (c > 1 && columns[c - 2] < newLength)
    throw Error(ErrorKind::NotAStrip, "adding a box in column " + std::to_string(c) +
                                          " does not give a partition");
  columns[c - 1] = newLength;
}

std::vector<int> strip_columns(const Partition& lambda, const Partition& mu) {
  if (!is_horizontal_strip(lambda, mu))
    throw Error(ErrorKind::NotAStrip, to_string(mu) + "/" + to_string(lambda) + " is not a horizontal strip");
  const Composition lc = lambda.column_lengths();
  const Composition mc = mu.column_lengths();
  std::vector<int> cols;
  for (int c = 1; c <= static_cast<int>(mc.size()); ++c)
    if (mc[c - 1] != column_length(lc, c)) cols.push_back(c);
  return cols;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error(ErrorKind::ShapeError, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error(ErrorKind::ShapeError, "partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Composition Partition::column_lengths() const { return conjugate(*this).parts(); }

std::string to_string(const Partition& p) {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < p.length(); ++i) out << (i ? "," : "") << p.parts()[i];
  out << ')';
  return out.str();
}

Partition from_column_lengths(std::span<const int> columns) {
  std::vector<int> trimmed(columns.begin(), columns.end());
  return conjugate(Partition(std::move(trimmed)));
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out;
  if (lambda.empty()) return Partition();
  const int width = lambda.row(1);
  out.reserve(width);
  for (int j = 1; j <= width; ++j) {
    int count = 0;
    while (count < lambda.length() && lambda.parts()[count] >= j) ++count;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

bool contains(const Partition& mu, const Partition& lambda) {
  if (lambda.length() > mu.length()) return false;
  for (int i = 1; i <= lambda.length(); ++i)
    if (lambda.row(i) > mu.row(i)) return false;
  return true;
}

bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
  if (!contains(mu, lambda)) return false;
  const Composition lc = lambda.column_lengths();
  const Composition mc = mu.column_lengths();
  for (int c = 1; c <= static_cast<int>(mc.size()); ++c)
    if (mc[c - 1] - column_length(lc, c) > 1) return false;
  return true;
}

Integer hook_coefficient(std::span<const int> colLengths, int k, std::span<const int> J) {
  if (J.empty() || J.back() != k) throw Error(ErrorKind::ShapeError, "sequence must end at column k");
  for (std::size_t q = 1; q < J.size(); ++q)
    if (J[q] >= J[q - 1]) throw Error(ErrorKind::ShapeError, "sequence must be strictly decreasing");
  Integer product = 1;
  const int base = column_length(colLengths, k);
  for (std::size_t q = 1; q + 1 < J.size(); ++q)
    product *= base - column_length(colLengths, J[q]) + J[q] - k + 1;
  return product;
}

Partition remove_boxes(const Partition& mu, std::span<const int> rows) {
  std::vector<int> parts = mu.parts();
  for (int r : rows) {
    if (r < 1 || r > static_cast<int>(parts.size()) || parts[r - 1] == 0)
      throw Error(ErrorKind::InvalidRemoval, "invalid removal: row " + std::to_string(r) + " is empty");
    --parts[r - 1];
    if (r < static_cast<int>(parts.size()) && parts[r - 1] < parts[r])
      throw Error(ErrorKind::InvalidRemoval,
                  "invalid removal: removing a box from row " + std::to_string(r) + " leaves no partition");
    // Zero rows may only appear at the bottom; anything else was caught above.
  }
  return Partition(std::move(parts));
}

BoxChain box_addition_chain(const Partition& lambda, const Partition& mu) {
  const std::vector<int> cols = strip_columns(lambda, mu);
  return box_addition_chain(lambda, mu, cols);
}

BoxChain box_addition_chain(const Partition& lambda, const Partition& mu,
                            std::span<const int> columnOrder) {
  std::vector<int> expected = strip_columns(lambda, mu);
  std::vector<int> given(columnOrder.begin(), columnOrder.end());
  std::sort(given.begin(), given.end());
  if (given != expected) throw Error(ErrorKind::NotAStrip, "column order does not match the strip mu/lambda");

  BoxChain chain;
  chain.shapes.push_back(lambda);
  Composition columns = lambda.column_lengths();
  for (int c : columnOrder) {
    add_box_to_column(columns, c);
    chain.shapes.push_back(from_column_lengths(columns));
    chain.columns.push_back(c);
  }
  return chain;
}

std::vector<std::vector<int>> admissible_orders(const Partition& lambda, const Partition& mu) {
  const std::vector<int> cols = strip_columns(lambda, mu);
  std::vector<std::vector<int>> orders;
  std::vector<int> current;
  std::vector<bool> used(cols.size(), false);
  std::function<void(Composition&)> extend = [&](Composition& shape) {
    if (current.size() == cols.size()) {
      orders.push_back(current);
      return;
    }
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (used[i]) continue;
      Composition next = shape;
      try {
        add_box_to_column(next, cols[i]);
      } catch (const Error&) {
        continue;
      }
      used[i] = true;
      current.push_back(cols[i]);
      extend(next);
      current.pop_back();
      used[i] = false;
    }
  };
  Composition start = lambda.column_lengths();
  extend(start);
  return orders;
}

std::vector<ColumnTableau> enumerate_ssyt(const Partition& lambda, int n) {
  std::vector<ColumnTableau> out;
  const Composition shape = lambda.column_lengths();
  if (n < 1 || (!shape.empty() && shape[0] > n)) return out;
  const std::vector<int> offsets = column_offsets(shape);
  const int total = offsets.back();
  Filling filling(total, 0);
  // Boxes are filled in column-major order with increasing values, so the
  // output comes out sorted by column reading word.
  std::vector<int> boxColumn(total), boxRow(total);
  for (int c = 0; c < static_cast<int>(shape.size()); ++c)
    for (int r = 0; r < shape[c]; ++r) {
      boxColumn[offsets[c] + r] = c;
      boxRow[offsets[c] + r] = r;
    }
  std::function<void(int)> fill = [&](int pos) {
    if (pos == total) {
      out.push_back(ColumnTableau{shape, filling});
      return;
    }
    const int c = boxColumn[pos], r = boxRow[pos];
    int lo = 1;
    if (r > 0) lo = std::max(lo, filling[pos - 1] + 1);
    if (c > 0) lo = std::max(lo, static_cast<int>(filling[offsets[c - 1] + r]));
    const int hi = n - (shape[c] - 1 - r);
    for (int v = lo; v <= hi; ++v) {
      filling[pos] = static_cast<Entry>(v);
      fill(pos + 1);
    }
  };
  fill(0);
  return out;
}

std::size_t dim_schur(const Partition& lambda, int n) {
  if (lambda.length() > n) return 0;
  Integer num = 1, den = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      num *= lambda.row(i) - lambda.row(j) + j - i;
      den *= j - i;
    }
  return static_cast<std::size_t>(Integer(num / den));
}

std::vector<Partition> partitions_of(int d) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> build = [&](int remaining, int maxPart) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, maxPart); part >= 1; --part) {
      current.push_back(part);
      build(remaining - part, part);
      current.pop_back();
    }
  };
  build(d, d);
  return out;
}

}  // namespace youngflat
