#include "youngflat/polynomial.hpp"

#include "youngflat/error.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

namespace youngflat {

Polynomial::Polynomial(int n) : n_(n) {
  if (n < 1) throw Error(ErrorKind::DimensionMismatch, "a polynomial needs at least one variable");
}

Polynomial Polynomial::monomial(const Exponent& alpha, const Rational& c) {
  Polynomial p(static_cast<int>(alpha.size()));
  p.add_term(alpha, c);
  return p;
}

Polynomial Polynomial::power(int n, int variable, int d) {
  if (variable < 1 || variable > n) throw Error(ErrorKind::IndexError, "variable index out of range");
  Exponent alpha(n, 0);
  alpha[variable - 1] = d;
  return monomial(alpha);
}

Rational Polynomial::coefficient(const Exponent& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& alpha, const Rational& c) {
  if (static_cast<int>(alpha.size()) != n_)
    throw Error(ErrorKind::DimensionMismatch, "exponent vector has the wrong length");
  for (int a : alpha)
    if (a < 0) throw Error(ErrorKind::DimensionMismatch, "negative exponent");
  if (c == 0) return;
  const int d = std::accumulate(alpha.begin(), alpha.end(), 0);
  if (!terms_.empty() && d != degree_) throw Error(ErrorKind::NotHomogeneous, "polynomial is not homogeneous");
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  degree_ = terms_.empty() ? 0 : d;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "polynomials in different numbers of variables");
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "polynomials in different numbers of variables");
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    degree_ = 0;
    return *this;
  }
  for (auto& [alpha, coeff] : terms_) coeff *= c;
  return *this;
}

namespace {

class Parser {
 public:
  Parser(int n, std::string_view src) : n_(n) {
    for (char ch : src)
      if (!std::isspace(static_cast<unsigned char>(ch))) text_.push_back(ch);
  }

  Polynomial parse() {
    if (text_.empty()) fail("empty polynomial");
    // Read everything first so that syntax errors win over homogeneity errors.
    std::vector<std::pair<Exponent, Rational>> terms;
    bool negative = accept('-');
    while (true) {
      auto [alpha, c] = term();
      if (negative) c = -c;
      terms.emplace_back(std::move(alpha), std::move(c));
      if (pos_ == text_.size()) break;
      if (accept('+')) negative = false;
      else if (accept('-')) negative = true;
      else fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    Polynomial p(n_);
    for (const auto& [alpha, c] : terms) p.add_term(alpha, c);
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, "syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  bool accept(char ch) {
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }
  bool at_letter() const { return pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_])); }

  std::string digits() {
    std::string out;
    while (at_digit()) out.push_back(text_[pos_++]);
    if (out.empty()) fail("expected a number");
    return out;
  }

  int small_number() {
    const std::string s = digits();
    if (s.size() > 6) fail("number too large");
    return std::stoi(s);
  }

  std::pair<Exponent, Rational> term() {
    Exponent alpha(n_, 0);
    Rational c(1);
    bool needFactor = true;
    if (at_digit()) {
      c = Rational(Integer(digits()));
      if (accept('/')) {
        Integer den(digits());
        if (den == 0) fail("zero denominator");
        c /= Rational(den);
      }
      needFactor = accept('*');
      if (!needFactor && !at_letter()) return {alpha, c};
    }
    factor(alpha);
    while (accept('*')) factor(alpha);
    return {alpha, c};
  }

  void factor(Exponent& alpha) {
    if (!at_letter()) fail("expected a variable");
    const char letter = text_[pos_++];
    int index;
    if (letter == 'x') {
      index = at_digit() ? small_number() + 1 : 1;
    } else if (letter <= 'w') {
      index = letter - 'a' + 1;
    } else {
      --pos_;
      fail("unknown variable '" + std::string(1, letter) + "'");
    }
    if (index > n_)
      throw Error(ErrorKind::IndexError, "variable index " + std::to_string(index) + " exceeds " + std::to_string(n_));
    int power = 1;
    if (accept('^')) power = small_number();
    alpha[index - 1] += power;
  }

  int n_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(int n, std::string_view src) { return Parser(n, src).parse(); }

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [alpha, c] = *it;
    Rational magnitude = c < 0 ? Rational(-c) : c;
    if (c < 0) out << '-';
    else if (!first) out << '+';
    first = false;
    const bool constant = p.degree() == 0;
    if (magnitude != 1 || constant) out << magnitude.str() << (constant ? "" : "*");
    bool firstFactor = true;
    for (int i = 0; i < p.n(); ++i) {
      if (alpha[i] == 0) continue;
      if (!firstFactor) out << '*';
      firstFactor = false;
      out << 'x' << i;
      if (alpha[i] > 1) out << '^' << alpha[i];
    }
  }
  return out.str();
}

}  // namespace youngflat
