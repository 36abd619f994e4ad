// flattening N MU ROWS POLY [flags]
//
// Builds the Young flattening F_{lambda,mu}(POLY) where lambda is MU with one
// box removed from each listed row, and prints its exact rank.

#include "youngflat/error.hpp"
#include "youngflat/exactla.hpp"
#include "youngflat/flatten.hpp"
#include "youngflat/glaction.hpp"
#include "youngflat/polynomial.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <regex>

namespace yf = youngflat;

namespace {

constexpr int kUsage = 1;
constexpr int kShape = 2;
constexpr int kParse = 3;
constexpr int kDegree = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_list(const std::string& text, const char* what) {
  static const std::regex form(R"(\s*\[\s*(\d+\s*(,\s*\d+\s*)*)?\]\s*)");
  if (!std::regex_match(text, form)) throw UsageError(std::string("bad ") + what + " list: " + text);
  static const std::regex number(R"(\d+)");
  std::vector<int> out;
  for (std::sregex_iterator it(text.begin(), text.end(), number), end; it != end; ++it) {
    if (it->str().size() > 4) throw UsageError(std::string(what) + " entry too large: " + it->str());
    out.push_back(std::stoi(it->str()));
  }
  return out;
}

int exit_code(yf::ErrorKind kind) {
  switch (kind) {
    case yf::ErrorKind::InvalidRemoval:
    case yf::ErrorKind::NotAStrip:
    case yf::ErrorKind::ShapeError: return kShape;
    case yf::ErrorKind::SyntaxError:
    case yf::ErrorKind::IndexError:
    case yf::ErrorKind::NotHomogeneous: return kParse;
    case yf::ErrorKind::DegreeMismatch: return kDegree;
    default: return kUsage;
  }
}

int thread_count() {
  const char* env = std::getenv("THREADS");
  if (!env || !*env) return 1;
  const std::string value(env);
  if (value.size() > 4 || value.find_first_not_of("0123456789") != std::string::npos || std::stoi(value) < 1)
    throw UsageError("THREADS must be a positive integer");
  return std::stoi(value);
}

// Variable index named by VAR in the polynomial syntax.
int variable_index(int n, const std::string& name) {
  const yf::Polynomial p = yf::parse_polynomial(n, name);
  if (p.terms().size() != 1 || p.degree() != 1 || p.terms().begin()->second != 1)
    throw UsageError("--bound expects a single variable, got " + name);
  const yf::Exponent& alpha = p.terms().begin()->first;
  return static_cast<int>(std::find(alpha.begin(), alpha.end(), 1) - alpha.begin()) + 1;
}

// Fixed pseudo-random invertible integer matrix.
yf::GroupElement selfcheck_element(int n) {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> entry(-2, 2);
  while (true) {
    yf::GroupElement g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = entry(rng);
    if (yf::rank(g) == static_cast<std::size_t>(n)) return g;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact rank of the Young flattening F_{lambda,mu}(POLY).\n"
      "lambda is MU with one box removed from the end of each row in ROWS (1-based).\n\n"
      "Polynomial syntax: terms joined by + and -, e.g. a^3+b*c^2 or 3/2*x0^2*x1.\n"
      "Variables: a..w (a is the first), x0, x1, ... (x0 is the first), bare x (the first).\n"
      "Coefficients are integers or fractions p/q; the polynomial must be homogeneous.\n\n"
      "Exit codes: 0 ok, 1 usage, 2 invalid shape or strip, 3 polynomial parse error,\n"
      "4 degree mismatch. Set THREADS to build matrix columns in parallel.",
      "flattening"};
  int n = 0;
  std::string muText, rowsText, polyText, matrixPath, boundVar;
  bool showBasis = false, boxfill = false, selfcheck = false;
  app.add_option("N", n, "dimension of V")->required();
  app.add_option("MU", muText, "target partition, e.g. [5,2,1]")->required();
  app.add_option("ROWS", rowsText, "rows losing a box, e.g. [1,2,3]")->required();
  app.add_option("POLY", polyText, "homogeneous polynomial")->required();
  app.add_option("--matrix", matrixPath, "write the matrix to PATH");
  app.add_option("--bound", boundVar, "also print the rank quotient against VAR^d");
  app.add_flag("--basis", showBasis, "print the row and column tableau bases");
  app.add_flag("--boxfill", boxfill, "use the naive box-filling map instead");
  app.add_flag("--selfcheck", selfcheck, "verify GL-equivariance on a fixed group element");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (n < 1 || n > 255) throw UsageError("N must be between 1 and 255");
    const int threads = thread_count();
    const yf::Partition mu(parse_list(muText, "MU"));
    const yf::Partition lambda = yf::remove_boxes(mu, parse_list(rowsText, "ROWS"));
    const yf::Polynomial p = yf::parse_polynomial(n, polyText);
    yf::FlattenOptions options;
    options.threads = threads;

    auto build = [&](const yf::Polynomial& q) {
      return boxfill ? yf::boxfill_matrix(lambda, mu, q, n) : yf::flattening_matrix(lambda, mu, q, n, options);
    };
    const yf::FlatteningMatrix f = build(p);
    const std::size_t r = yf::rank(f.entries);
    std::cout << "rank: " << r << '\n';

    if (!boundVar.empty()) {
      const int variable = variable_index(n, boundVar);
      if (p.is_zero()) throw yf::Error(yf::ErrorKind::DegenerateInput, "--bound needs a nonzero polynomial");
      const std::size_t denominator = yf::rank(build(yf::Polynomial::power(n, variable, p.degree())).entries);
      if (denominator == 0) throw yf::Error(yf::ErrorKind::ZeroDenominator, "flattening of " + boundVar + "^d has rank 0");
      std::cout << "bound: " << (r + denominator - 1) / denominator << '\n';
    }

    if (showBasis) {
      std::cout << "rows:\n";
      for (const auto& t : f.rows) std::cout << yf::to_string(t) << '\n';
      std::cout << "cols:\n";
      for (const auto& t : f.cols) std::cout << yf::to_string(t) << '\n';
    }

    if (!matrixPath.empty()) {
      std::ofstream out(matrixPath);
      if (!out) throw UsageError("cannot write " + matrixPath);
      yf::write_matrix(out, f.entries);
      if (!out.flush()) throw UsageError("cannot write " + matrixPath);
    }

    if (selfcheck) {
      const yf::GroupElement g = selfcheck_element(n);
      const yf::RationalMatrix lhs = yf::rep_matrix(g, mu, n) * f.entries;
      const yf::RationalMatrix rhs = build(yf::act_poly(g, p)).entries * yf::rep_matrix(g, lambda, n);
      const bool ok = lhs == rhs;
      std::cout << "selfcheck: " << (ok ? "PASS" : "FAIL") << '\n';
      if (!ok) return kUsage;
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const yf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
}
