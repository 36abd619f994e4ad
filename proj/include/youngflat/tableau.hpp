#pragma once

// Column-major tableau storage shared by every module.
//
// A filling stores the entries of a tableau column by column, each column top
// to bottom. The column lengths live next to it (or once per vector when many
// fillings share a shape).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace youngflat {

using Entry = std::uint8_t;
using Composition = std::vector<int>;
using Filling = std::vector<Entry>;

struct FillingHash {
  std::size_t operator()(const Filling& f) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Entry e : f) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Start index of every column in a column-major filling; one extra trailing
/// element holds the total box count.
std::vector<int> column_offsets(std::span<const int> shape);

int box_count(std::span<const int> shape);

struct ColumnTableau {
  Composition shape;
  Filling entries;

  int columns() const { return static_cast<int>(shape.size()); }
  /// Column c, 0-based.
  std::span<const Entry> column(int c) const;

  friend auto operator<=>(const ColumnTableau&, const ColumnTableau&) = default;
};

ColumnTableau from_columns(const std::vector<std::vector<int>>& columns);
/// Rows must be left justified and weakly decreasing in length.
ColumnTableau from_rows(const std::vector<std::vector<int>>& rows);

std::vector<std::vector<int>> to_columns(const ColumnTableau& t);
std::vector<std::vector<int>> to_rows(const ColumnTableau& t);

/// Row form, e.g. "[[1,1],[2]]".
std::string to_string(const ColumnTableau& t);

/// Columns strictly increasing, rows weakly increasing, column lengths weakly
/// decreasing.
bool is_semistandard(const ColumnTableau& t);

/// Drops trailing empty columns.
Composition trim(Composition shape);

}  // namespace youngflat
