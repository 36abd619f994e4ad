#include "youngflat/glaction.hpp"

#include "youngflat/error.hpp"

#include <map>
#include <unordered_map>

namespace youngflat {

namespace {

void check_square(const GroupElement& g, int n) {
  if (g.rows() != n || g.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "group element must be " + std::to_string(n) + "x" + std::to_string(n));
}

// Image of one column under g, as (strictly increasing column, coefficient).
std::vector<std::pair<Filling, Rational>> act_column(const GroupElement& g, std::span<const Entry> column) {
  const int n = static_cast<int>(g.rows());
  const int len = static_cast<int>(column.size());
  std::map<Filling, Rational> out;
  Filling image(len);
  std::vector<bool> used(n + 1, false);
  // Depth-first over the choices for each box; a repeated value kills the
  // whole branch.
  auto expand = [&](auto&& self, int pos, const Rational& coeff) -> void {
    if (pos == len) {
      Filling sorted = image;
      std::vector<int> shape{len};
      const int sign = sort_columns(shape, sorted);
      accumulate(out, sorted, sign > 0 ? coeff : Rational(-coeff));
      return;
    }
    for (int j = 1; j <= n; ++j) {
      if (used[j]) continue;
      const Rational& gji = g(j - 1, column[pos] - 1);
      if (gji == 0) continue;
      used[j] = true;
      image[pos] = static_cast<Entry>(j);
      self(self, pos + 1, coeff * gji);
      used[j] = false;
    }
  };
  expand(expand, 0, Rational(1));
  return {out.begin(), out.end()};
}

}  // namespace

Polynomial act_poly(const GroupElement& g, const Polynomial& p) {
  check_square(g, p.n());
  const int n = p.n();
  Polynomial result(n);
  for (const auto& [alpha, c] : p.terms()) {
    std::map<Exponent, Rational> product{{Exponent(n, 0), c}};
    for (int i = 0; i < n; ++i)
      for (int power = 0; power < alpha[i]; ++power) {
        std::map<Exponent, Rational> next;
        for (const auto& [beta, coeff] : product)
          for (int j = 0; j < n; ++j) {
            if (g(j, i) == 0) continue;
            Exponent gamma = beta;
            ++gamma[j];
            next[gamma] += coeff * g(j, i);
          }
        product = std::move(next);
      }
    for (const auto& [beta, coeff] : product) result.add_term(beta, coeff);
  }
  return result;
}

XVector act(const GroupElement& g, const XVector& v) {
  const Composition& shape = v.shape();
  XVector out(shape);
  if (v.is_zero()) return out;
  const int n = static_cast<int>(g.rows());
  check_square(g, n);
  const std::vector<int> offsets = column_offsets(shape);
  for (const auto& [filling, coeff] : v.terms()) {
    for (Entry e : filling)
      if (e < 1 || e > n) throw Error(ErrorKind::IndexError, "entry outside the basis of V");
    std::vector<std::vector<std::pair<Filling, Rational>>> columns;
    for (std::size_t c = 0; c < shape.size(); ++c)
      columns.push_back(act_column(g, std::span(filling).subspan(offsets[c], shape[c])));
    // Tensor product of the column images.
    Filling image(filling.size());
    auto combine = [&](auto&& self, std::size_t c, const Rational& acc) -> void {
      if (c == shape.size()) {
        out.add(image, acc);
        return;
      }
      for (const auto& [col, x] : columns[c]) {
        std::copy(col.begin(), col.end(), image.begin() + offsets[c]);
        self(self, c + 1, acc * x);
      }
    };
    combine(combine, 0, coeff);
  }
  return out;
}

SchurVector act(const GroupElement& g, const SchurVector& v, Straightener& engine) {
  if (v.is_zero()) return v;
  return engine.straighten(act(g, v.lift()));
}

RationalMatrix rep_matrix(const GroupElement& g, const Partition& lambda, int n) {
  check_square(g, n);
  if (lambda.length() > n) throw Error(ErrorKind::ShapeError, to_string(lambda) + " has more than " + std::to_string(n) + " rows");
  const std::vector<ColumnTableau> basis = enumerate_ssyt(lambda, n);
  std::unordered_map<Filling, Eigen::Index, FillingHash> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i].entries, static_cast<Eigen::Index>(i));
  const auto dim = static_cast<Eigen::Index>(basis.size());
  RationalMatrix m = RationalMatrix::Zero(dim, dim);
  Straightener engine;
  for (Eigen::Index col = 0; col < dim; ++col) {
    const SchurVector image = act(g, SchurVector::basis(basis[col]), engine);
    for (const auto& [filling, coeff] : image.terms()) m(index.at(filling), col) = coeff;
  }
  return m;
}

}  // namespace youngflat
