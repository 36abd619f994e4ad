#include "youngflat/tableau.hpp"

#include "youngflat/error.hpp"

#include <numeric>
#include <sstream>

namespace youngflat {

std::vector<int> column_offsets(std::span<const int> shape) {
  std::vector<int> offsets(shape.size() + 1, 0);
  for (std::size_t c = 0; c < shape.size(); ++c) offsets[c + 1] = offsets[c] + shape[c];
  return offsets;
}

int box_count(std::span<const int> shape) { return std::accumulate(shape.begin(), shape.end(), 0); }

std::span<const Entry> ColumnTableau::column(int c) const {
  int start = 0;
  for (int i = 0; i < c; ++i) start += shape[i];
  return std::span<const Entry>(entries).subspan(start, shape[c]);
}

ColumnTableau from_columns(const std::vector<std::vector<int>>& columns) {
  ColumnTableau t;
  for (const auto& col : columns) {
    t.shape.push_back(static_cast<int>(col.size()));
    for (int e : col) {
      if (e < 1 || e > 255) throw Error(ErrorKind::ShapeError, "tableau entry out of range");
      t.entries.push_back(static_cast<Entry>(e));
    }
  }
  return t;
}

ColumnTableau from_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<int>> columns;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0 && rows[r].size() > rows[r - 1].size())
      throw Error(ErrorKind::ShapeError, "rows must be weakly decreasing in length");
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (columns.size() <= c) columns.emplace_back();
      columns[c].push_back(rows[r][c]);
    }
  }
  return from_columns(columns);
}

std::vector<std::vector<int>> to_columns(const ColumnTableau& t) {
  std::vector<std::vector<int>> out;
  std::size_t pos = 0;
  for (int len : t.shape) {
    out.emplace_back(t.entries.begin() + pos, t.entries.begin() + pos + len);
    pos += len;
  }
  return out;
}

std::vector<std::vector<int>> to_rows(const ColumnTableau& t) {
  std::vector<std::vector<int>> rows;
  auto cols = to_columns(t);
  for (const auto& col : cols) {
    for (std::size_t r = 0; r < col.size(); ++r) {
      if (rows.size() <= r) rows.emplace_back();
      rows[r].push_back(col[r]);
    }
  }
  return rows;
}

std::string to_string(const ColumnTableau& t) {
  std::ostringstream out;
  out << '[';
  auto rows = to_rows(t);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out << ',';
    out << '[';
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) out << ',';
      out << rows[r][c];
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

bool is_semistandard(const ColumnTableau& t) {
  auto offsets = column_offsets(t.shape);
  for (int c = 0; c < t.columns(); ++c) {
    if (c + 1 < t.columns() && t.shape[c + 1] > t.shape[c]) return false;
    for (int r = 0; r < t.shape[c]; ++r) {
      Entry e = t.entries[offsets[c] + r];
      if (r > 0 && t.entries[offsets[c] + r - 1] >= e) return false;
      if (c + 1 < t.columns() && r < t.shape[c + 1] && t.entries[offsets[c + 1] + r] < e) return false;
    }
  }
  return true;
}

Composition trim(Composition shape) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  return shape;
}

}  // namespace youngflat
