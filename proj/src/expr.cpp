#include "conicrank/expr.hpp"

#include <cctype>

#include "conicrank/errors.hpp"

namespace conicrank {

BiPoly BiPoly::constant(const Rational& c) {
  BiPoly p;
  p.add_term({0, 0}, c);
  return p;
}

BiPoly BiPoly::x() {
  BiPoly p;
  p.add_term({1, 0}, 1);
  return p;
}

BiPoly BiPoly::T() {
  BiPoly p;
  p.add_term({0, 1}, 1);
  return p;
}

void BiPoly::add_term(Key k, const Rational& c) {
  Rational& slot = terms_[k];
  slot += c;
  if (sgn(slot) == 0) terms_.erase(k);
}

Rational BiPoly::coeff(int dx, int dT) const {
  auto it = terms_.find({dx, dT});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int BiPoly::degree_T() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k, c);
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  }
  return r;
}

BiPoly BiPoly::operator-() const { return scaled(-1); }

BiPoly BiPoly::scaled(const Rational& c) const {
  BiPoly r;
  for (const auto& [k, v] : terms_) r.add_term(k, v * c);
  return r;
}

namespace {

constexpr int kMaxExponent = 64;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  BiPoly parse() {
    skip_prefix();
    BiPoly e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

  void skip_prefix() {
    auto eq = s_.find('=');
    if (eq == std::string_view::npos) return;
    std::string lhs;
    for (std::size_t i = 0; i < eq; ++i) {
      if (!std::isspace(static_cast<unsigned char>(s_[i]))) lhs += s_[i];
    }
    if (lhs != "y^2") {
      pos_ = 0;
      skip_ws();
      fail("left-hand side must be y^2");
    }
    pos_ = eq + 1;
  }

  BiPoly expr() {
    BiPoly acc = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  BiPoly term() {
    BiPoly acc = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (c == '/') {
        ++pos_;
        std::size_t at = pos_;
        BiPoly d = unary();
        if (!d.is_constant()) {
          pos_ = at;
          fail("division by a non-constant");
        }
        Rational v = d.coeff(0, 0);
        if (sgn(v) == 0) {
          pos_ = at;
          fail("division by zero");
        }
        acc = acc.scaled(1 / v);
      } else if (c == 'x' || c == 'T' || c == '(') {
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  BiPoly unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  BiPoly power() {
    BiPoly base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    std::size_t start = pos_;
    std::string digits = read_digits();
    if (digits.empty()) fail("expected a non-negative integer exponent");
    if (digits.size() > 3 || std::stoi(digits) > kMaxExponent) {
      pos_ = start;
      fail("exponent too large");
    }
    BiPoly r = BiPoly::constant(1);
    for (int i = std::stoi(digits); i > 0; --i) r = r * base;
    return r;
  }

  std::string read_digits() {
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
    return d;
  }

  BiPoly primary() {
    char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(c))) return BiPoly::constant(Rational(Integer(read_digits())));
    if (c == 'x') {
      ++pos_;
      return BiPoly::x();
    }
    if (c == 'T') {
      ++pos_;
      return BiPoly::T();
    }
    if (c == '(') {
      ++pos_;
      BiPoly e = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_expression(std::string_view text) { return Parser(text).parse(); }

UniPoly parse_univariate(std::string_view text, Var var) {
  BiPoly b = parse_expression(text);
  std::vector<Rational> coeffs;
  for (const auto& [k, c] : b.terms()) {
    const int other = var == Var::T ? k.first : k.second;
    const int own = var == Var::T ? k.second : k.first;
    if (other != 0) {
      throw ParseError(std::string("expression must only involve ") + static_cast<char>(var), 0);
    }
    if (coeffs.size() <= static_cast<std::size_t>(own)) coeffs.resize(static_cast<std::size_t>(own) + 1);
    coeffs[static_cast<std::size_t>(own)] = c;
  }
  return UniPoly(var, std::move(coeffs));
}

}  // namespace conicrank
