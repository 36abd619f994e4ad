#include "youngflat/pieri.hpp"

#include "youngflat/error.hpp"

namespace youngflat {

namespace {

void check_letter(Entry w, int n) {
  if (w < 1 || w > n) throw Error(ErrorKind::IndexError, "basis index " + std::to_string(w) + " outside 1.." + std::to_string(n));
}

}  // namespace

PieriProblem::PieriProblem(Partition lambda, Partition mu, int n)
    : lambda_(std::move(lambda)), mu_(std::move(mu)), n_(n) {
  validate();
  chain_ = box_addition_chain(lambda_, mu_);
}

PieriProblem::PieriProblem(Partition lambda, Partition mu, int n, std::span<const int> columnOrder)
    : lambda_(std::move(lambda)), mu_(std::move(mu)), n_(n) {
  validate();
  chain_ = box_addition_chain(lambda_, mu_, columnOrder);
}

void PieriProblem::validate() const {
  if (n_ < 1) throw Error(ErrorKind::ShapeError, "need at least one variable");
  if (!is_horizontal_strip(lambda_, mu_))
    throw Error(ErrorKind::NotAStrip, to_string(mu_) + "/" + to_string(lambda_) + " is not a horizontal strip");
  if (mu_.length() > n_)
    throw Error(ErrorKind::ShapeError, to_string(mu_) + " has more than " + std::to_string(n_) + " rows");
}

XVector zeta_unstraightened(const Composition& lambdaColumns, int k, Entry w, const Filling& filling) {
  const int m = static_cast<int>(lambdaColumns.size()) + 1;
  if (k < 1 || k > m) throw Error(ErrorKind::ShapeError, "box column out of range");
  if (k > 1 && lambdaColumns[k - 2] < (k <= static_cast<int>(lambdaColumns.size()) ? lambdaColumns[k - 1] : 0) + 1)
    throw Error(ErrorKind::ShapeError, "adding a box in column " + std::to_string(k) + " does not give a partition");

  Composition source = lambdaColumns;
  source.push_back(1);
  Filling start = filling;
  start.push_back(w);
  XVector lifted(source);
  lifted.add(start, Rational(1));
  if (k == m) return lifted;

  // paths[c] collects sigma_J over the sequences J from column c down to k,
  // each divided by the hook lengths of its interior columns; the sequence
  // ending at column m gives the map itself.
  std::vector<XVector> paths(m + 1);
  paths[k] = lifted;
  for (int c = k + 1; c <= m; ++c) {
    XVector sum;
    for (int prev = k; prev < c; ++prev) {
      if (paths[prev].is_zero()) continue;
      XVector moved = sigma(c, prev, paths[prev]);
      if (prev > k) {
        const int hook = lambdaColumns[k - 1] - lambdaColumns[prev - 1] + prev - k + 1;
        moved *= Rational(1) / Rational(hook);
      }
      sum += moved;
    }
    paths[c] = std::move(sum);
  }
  XVector out(trim(paths[m].shape()));
  for (const auto& [f, coeff] : paths[m].terms()) out.add(f, coeff);
  return out;
}

SchurVector zeta(const Partition& lambda, int k, Entry w, const SchurVector& t) {
  if (!t.is_zero() && t.shape() != lambda) throw Error(ErrorKind::ShapeError, "vector shape differs from lambda");
  const Composition columns = lambda.column_lengths();
  Composition target = columns;
  if (k == static_cast<int>(target.size()) + 1) target.push_back(0);
  if (k < 1 || k > static_cast<int>(target.size())) throw Error(ErrorKind::ShapeError, "box column out of range");
  ++target[k - 1];
  SchurVector out(from_column_lengths(target));
  Straightener& engine = thread_straightener();
  for (const auto& [filling, coeff] : t.terms()) {
    XVector image = zeta_unstraightened(columns, k, w, filling);
    out.add(engine.straighten(image).terms(), coeff);
  }
  return out;
}

SchurVector psi(const PieriProblem& problem, std::span<const Entry> word, const SchurVector& t) {
  const int d = problem.degree();
  if (static_cast<int>(word.size()) != d)
    throw Error(ErrorKind::DegreeMismatch, "word of length " + std::to_string(word.size()) + " for a strip of " +
                                               std::to_string(d) + " boxes");
  const BoxChain& chain = problem.chain();
  SchurVector v = t;
  for (int step = 0; step < d; ++step) {
    const Entry w = word[d - 1 - step];
    check_letter(w, problem.n());
    v = zeta(chain.shapes[step], chain.columns[step], w, v);
  }
  return v;
}

ColumnTableau z_witness(const Partition& lambda, int n) {
  const Composition columns = lambda.column_lengths();
  if (!columns.empty() && columns[0] > n)
    throw Error(ErrorKind::ShapeError, to_string(lambda) + " has a column longer than " + std::to_string(n));
  ColumnTableau t;
  t.shape = columns;
  for (int len : columns)
    for (int r = 1; r <= len; ++r) t.entries.push_back(static_cast<Entry>(len == n ? r : r + 1));
  return t;
}

PieriEngine::PieriEngine(const PieriProblem& problem) : problem_(problem) {
  for (const Partition& shape : problem_.chain().shapes) stepColumns_.push_back(shape.column_lengths());
  stepCache_.resize(static_cast<std::size_t>(problem_.degree()) * (problem_.n() + 1));
}

const Combination& PieriEngine::step_basis(int step, Entry w, const Filling& ssyt) {
  auto& cache = stepCache_[static_cast<std::size_t>(step) * (problem_.n() + 1) + w];
  if (auto it = cache.find(ssyt); it != cache.end()) return it->second;
  XVector image = zeta_unstraightened(stepColumns_[step], problem_.chain().columns[step], w, ssyt);
  SchurVector straight = straightener_.straighten(image);
  return cache.emplace(ssyt, straight.terms()).first->second;
}

SchurVector PieriEngine::apply_step(int step, Entry w, const SchurVector& t) {
  check_letter(w, problem_.n());
  const BoxChain& chain = problem_.chain();
  if (step < 0 || step >= problem_.degree()) throw Error(ErrorKind::DegreeMismatch, "step out of range");
  if (!t.is_zero() && t.shape() != chain.shapes[step]) throw Error(ErrorKind::ShapeError, "vector shape differs from the chain");
  SchurVector out(chain.shapes[step + 1]);
  for (const auto& [filling, coeff] : t.terms()) out.add(step_basis(step, w, filling), coeff);
  return out;
}

SchurVector PieriEngine::psi(std::span<const Entry> word, const SchurVector& t) {
  const int d = problem_.degree();
  if (static_cast<int>(word.size()) != d)
    throw Error(ErrorKind::DegreeMismatch, "word of length " + std::to_string(word.size()) + " for a strip of " +
                                               std::to_string(d) + " boxes");
  SchurVector v = t;
  if (v.is_zero()) v = SchurVector(problem_.lambda());
  for (int step = 0; step < d; ++step) v = apply_step(step, word[d - 1 - step], v);
  return v;
}

}  // namespace youngflat
