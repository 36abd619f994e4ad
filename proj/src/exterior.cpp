#include "youngflat/exterior.hpp"

#include "youngflat/error.hpp"

namespace youngflat {

void accumulate(Combination& terms, const Filling& key, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

void accumulate(Combination& terms, const Combination& other, const Rational& scale) {
  if (scale == 0) return;
  for (const auto& [key, coeff] : other) accumulate(terms, key, coeff * scale);
}

int sort_columns(std::span<const int> shape, Filling& filling) {
  int sign = 1;
  int start = 0;
  for (int len : shape) {
    // Insertion sort; columns are short.
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
    start += len;
  }
  return sign;
}

std::optional<std::pair<int, ColumnTableau>> normalize_filling(const std::vector<std::vector<int>>& columns) {
  ColumnTableau t = from_columns(columns);
  const int sign = sort_columns(t.shape, t.entries);
  if (sign == 0) return std::nullopt;
  return std::make_pair(sign, std::move(t));
}

XVector XVector::basis(const ColumnTableau& t) {
  XVector v(t.shape);
  v.add_unsorted(t.entries, Rational(1));
  return v;
}

void XVector::add_unsorted(Filling filling, const Rational& coeff) {
  if (static_cast<int>(filling.size()) != box_count(shape_))
    throw Error(ErrorKind::DimensionMismatch, "filling does not match the vector's shape");
  const int sign = sort_columns(shape_, filling);
  if (sign == 0) return;
  accumulate(terms_, filling, sign > 0 ? coeff : Rational(-coeff));
}

XVector& XVector::operator+=(const XVector& other) {
  if (other.is_zero()) return *this;
  if (is_zero() && shape_ != other.shape_) shape_ = other.shape_;
  if (shape_ != other.shape_) throw Error(ErrorKind::DimensionMismatch, "adding vectors of different shapes");
  accumulate(terms_, other.terms_, Rational(1));
  return *this;
}

XVector& XVector::operator-=(const XVector& other) {
  if (other.is_zero()) return *this;
  if (is_zero() && shape_ != other.shape_) shape_ = other.shape_;
  if (shape_ != other.shape_) throw Error(ErrorKind::DimensionMismatch, "subtracting vectors of different shapes");
  accumulate(terms_, other.terms_, Rational(-1));
  return *this;
}

XVector& XVector::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_) coeff *= scale;
  return *this;
}

bool operator==(const XVector& a, const XVector& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.shape_ == b.shape_ && a.terms_ == b.terms_;
}

XVector sigma(int i, int j, const XVector& v) {
  const int columns = static_cast<int>(v.shape().size());
  if (i == j || i < 1 || j < 1 || i > columns || j > columns)
    throw Error(ErrorKind::ShapeError, "sigma column indices out of range");
  Composition target = v.shape();
  if (target[i - 1] == 0) return XVector(target);
  --target[i - 1];
  ++target[j - 1];
  XVector out(target);
  const std::vector<int> offsets = column_offsets(v.shape());
  for (const auto& [filling, coeff] : v.terms()) {
    move_box(v.shape(), offsets, filling, i - 1, j - 1, [&](Filling&& moved, int sign) {
      out.add(moved, sign > 0 ? coeff : Rational(-coeff));
    });
  }
  return out;
}

std::vector<std::vector<int>> decreasing_sequences(int m, int k) {
  if (k > m) throw Error(ErrorKind::ShapeError, "decreasing sequences need k <= m");
  std::vector<std::vector<int>> out;
  if (k == m) return {{m}};
  const int interior = m - k - 1;
  // Bit b of the mask selects interior column m-1-b.
  for (unsigned mask = 0; mask < (1u << interior); ++mask) {
    std::vector<int> seq{m};
    for (int b = 0; b < interior; ++b)
      if (mask & (1u << b)) seq.push_back(m - 1 - b);
    seq.push_back(k);
    out.push_back(std::move(seq));
  }
  return out;
}

XVector sigma_path(std::span<const int> J, const XVector& v) {
  XVector current = v;
  for (std::size_t q = J.size(); q-- > 1;) {
    current = sigma(J[q - 1], J[q], current);
  }
  return current;
}

}  // namespace youngflat
