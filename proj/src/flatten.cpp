#include "youngflat/flatten.hpp"

#include "youngflat/error.hpp"
#include "youngflat/exactla.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace youngflat {

namespace {

// Words sharing a suffix share the inner single-box applications, so the
// words are stored reversed in a trie.
struct WordTrie {
  struct Node {
    std::map<Entry, std::unique_ptr<Node>> children;
    Rational weight;  // total coefficient of the word ending here
  };
  Node root;

  void insert(const std::vector<Entry>& word, const Rational& weight) {
    Node* node = &root;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      auto& child = node->children[*it];
      if (!child) child = std::make_unique<Node>();
      node = child.get();
    }
    node->weight += weight;
  }
};

void evaluate(PieriEngine& engine, const WordTrie::Node& node, int step, const SchurVector& v, SchurVector& out) {
  if (node.children.empty()) {
    if (node.weight != 0) out += node.weight * v;
    return;
  }
  for (const auto& [letter, child] : node.children) {
    SchurVector next = engine.apply_step(step, letter, v);
    if (next.is_zero()) continue;
    evaluate(engine, *child, step + 1, next, out);
  }
}

void check_input(const PieriProblem& problem, const Polynomial& p) {
  if (p.n() != problem.n())
    throw Error(ErrorKind::DimensionMismatch, "polynomial has " + std::to_string(p.n()) + " variables, expected " +
                                                  std::to_string(problem.n()));
  if (!p.is_zero() && p.degree() != problem.degree())
    throw Error(ErrorKind::DegreeMismatch, "polynomial of degree " + std::to_string(p.degree()) + " for a strip of " +
                                               std::to_string(problem.degree()) + " boxes");
}

std::unordered_map<Filling, Eigen::Index, FillingHash> index_of(const std::vector<ColumnTableau>& basis) {
  std::unordered_map<Filling, Eigen::Index, FillingHash> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i].entries, static_cast<Eigen::Index>(i));
  return index;
}

// Accepts "[-]digits" or "[-]digits/digits" with a nonzero denominator.
Rational parse_entry(const std::string& token) {
  const std::size_t slash = token.find('/');
  auto is_integer = [](const std::string& s, bool allowSign) {
    std::size_t start = allowSign && !s.empty() && s[0] == '-' ? 1 : 0;
    return s.size() > start && std::all_of(s.begin() + start, s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const std::string num = token.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : token.substr(slash + 1);
  if (!is_integer(num, true) || !is_integer(den, false)) throw Error(ErrorKind::FormatError, "bad entry '" + token + "'");
  const Integer d(den);
  if (d == 0) throw Error(ErrorKind::FormatError, "zero denominator in '" + token + "'");
  return Rational(Integer(num)) / Rational(d);
}

}  // namespace

std::vector<std::pair<Integer, std::vector<Entry>>> embed_symmetric(const Exponent& alpha) {
  Integer multiplicity(1);
  std::vector<Entry> word;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (int t = 1; t <= alpha[i]; ++t) multiplicity *= t;
    word.insert(word.end(), static_cast<std::size_t>(alpha[i]), static_cast<Entry>(i + 1));
  }
  std::vector<std::pair<Integer, std::vector<Entry>>> out;
  do out.emplace_back(multiplicity, word);
  while (std::next_permutation(word.begin(), word.end()));
  return out;
}

FlatteningMatrix flattening_matrix(const Partition& lambda, const Partition& mu, const Polynomial& p, int n,
                                   const FlattenOptions& options) {
  const PieriProblem problem = options.column_order.empty()
                                   ? PieriProblem(lambda, mu, n)
                                   : PieriProblem(lambda, mu, n, options.column_order);
  check_input(problem, p);

  FlatteningMatrix f{enumerate_ssyt(mu, n), enumerate_ssyt(lambda, n), {}};
  const auto rows = static_cast<Eigen::Index>(f.rows.size());
  const auto cols = static_cast<Eigen::Index>(f.cols.size());
  f.entries = RationalMatrix::Zero(rows, cols);
  if (p.is_zero()) return f;

  WordTrie trie;
  for (const auto& [alpha, c] : p.terms())
    for (const auto& [multiplicity, word] : embed_symmetric(alpha)) trie.insert(word, c * Rational(multiplicity));
  const auto rowIndex = index_of(f.rows);

  auto work = [&](Eigen::Index first, Eigen::Index stride) {
    PieriEngine engine(problem);
    for (Eigen::Index col = first; col < cols; col += stride) {
      SchurVector image(mu);
      evaluate(engine, trie.root, 0, SchurVector::basis(f.cols[col]), image);
      for (const auto& [filling, coeff] : image.terms()) f.entries(rowIndex.at(filling), col) = coeff;
    }
  };
  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(std::max<Eigen::Index>(cols, 1))));
  if (threads == 1) {
    work(0, 1);
  } else {
    // Each worker owns a disjoint set of columns.
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  return f;
}

FlatteningMatrix boxfill_matrix(const Partition& lambda, const Partition& mu, const Polynomial& p, int n) {
  const PieriProblem problem(lambda, mu, n);
  check_input(problem, p);
  FlatteningMatrix f{enumerate_ssyt(mu, n), enumerate_ssyt(lambda, n), {}};
  f.entries = RationalMatrix::Zero(static_cast<Eigen::Index>(f.rows.size()), static_cast<Eigen::Index>(f.cols.size()));
  if (p.is_zero()) return f;

  const Composition lambdaColumns = lambda.column_lengths();
  const Composition muColumns = mu.column_lengths();
  const std::vector<int> stripColumns = problem.chain().columns;
  const auto rowIndex = index_of(f.rows);
  Straightener engine;
  for (std::size_t col = 0; col < f.cols.size(); ++col) {
    const std::vector<std::vector<int>> tColumns = to_columns(f.cols[col]);
    SchurVector image(mu);
    for (const auto& [alpha, c] : p.terms()) {
      std::vector<Entry> labels;
      for (std::size_t i = 0; i < alpha.size(); ++i)
        labels.insert(labels.end(), static_cast<std::size_t>(alpha[i]), static_cast<Entry>(i + 1));
      // Every distinct placement of the labels into the strip boxes, each box
      // at the bottom of its column.
      do {
        std::vector<std::vector<int>> columns = tColumns;
        columns.resize(muColumns.size());
        for (std::size_t b = 0; b < stripColumns.size(); ++b) columns[stripColumns[b] - 1].push_back(labels[b]);
        auto normal = normalize_filling(columns);
        if (!normal) continue;
        XVector v(normal->second.shape);
        v.add(normal->second.entries, Rational(normal->first));
        image.add(engine.straighten(v).terms(), c);
      } while (std::next_permutation(labels.begin(), labels.end()));
    }
    for (const auto& [filling, coeff] : image.terms())
      f.entries(rowIndex.at(filling), static_cast<Eigen::Index>(col)) = coeff;
  }
  return f;
}

std::size_t waring_bound(const Partition& lambda, const Partition& mu, const Polynomial& p, int variable, int n,
                         const FlattenOptions& options) {
  if (p.is_zero()) throw Error(ErrorKind::DegenerateInput, "the zero polynomial has no Waring rank bound");
  if (variable < 1 || variable > n) throw Error(ErrorKind::IndexError, "variable index out of range");
  const std::size_t numerator = rank(flattening_matrix(lambda, mu, p, n, options).entries);
  const Polynomial power = Polynomial::power(n, variable, p.degree());
  const std::size_t denominator = rank(flattening_matrix(lambda, mu, power, n, options).entries);
  if (denominator == 0) throw Error(ErrorKind::ZeroDenominator, "flattening of a pure power has rank zero");
  return (numerator + denominator - 1) / denominator;
}

void write_matrix(std::ostream& out, const RationalMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).str();
    out << '\n';
  }
}

RationalMatrix read_matrix(std::istream& in) {
  long rows = -1, cols = -1;
  std::string header;
  if (!std::getline(in, header)) throw Error(ErrorKind::FormatError, "missing matrix header");
  std::istringstream head(header);
  std::string extra;
  if (!(head >> rows >> cols) || rows < 0 || cols < 0 || (head >> extra))
    throw Error(ErrorKind::FormatError, "bad matrix header: " + header);
  RationalMatrix m(rows, cols);
  for (long i = 0; i < rows; ++i) {
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorKind::FormatError, "missing row " + std::to_string(i + 1));
    std::istringstream row(line);
    for (long j = 0; j < cols; ++j) {
      std::string token;
      if (!(row >> token)) throw Error(ErrorKind::FormatError, "short row " + std::to_string(i + 1));
      m(i, j) = parse_entry(token);
    }
    if (row >> extra) throw Error(ErrorKind::FormatError, "long row " + std::to_string(i + 1));
  }
  return m;
}

}  // namespace youngflat
