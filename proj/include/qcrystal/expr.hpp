#pragma once

#include <cctype>

#include "qcrystal/fnalg.hpp"
#include "qcrystal/kashiwara.hpp"
#include "qcrystal/polarization.hpp"

namespace qcrystal {
namespace cli {

/// Recursive-descent parser for the algebra expression grammar:
///   u(i,j), t, rational literals, +, -, *, ^k, star(...), S(...), qdet(n),
///   parentheses.
class AlgebraExprParser {
 public:
  AlgebraExprParser(const fnalg::Algebra& alg, std::string text)
      : alg_(alg), text_(std::move(text)) {}

  fnalg::FnAlgElem parse() {
    auto r = sum();
    skip_ws();
    if (pos_ != text_.size()) throw std::invalid_argument("trailing input at position " +
                                                          std::to_string(pos_));
    return r;
  }

 private:
  fnalg::FnAlgElem sum() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = get() == '-';
    fnalg::FnAlgElem acc = product();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      get();
      fnalg::FnAlgElem rhs = product();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
  }
  fnalg::FnAlgElem product() {
    fnalg::FnAlgElem acc = power();
    for (;;) {
      skip_ws();
      if (peek() != '*') return acc;
      get();
      acc = alg_.mul(acc, power());
    }
  }
  fnalg::FnAlgElem power() {
    fnalg::FnAlgElem base = atom();
    skip_ws();
    if (peek() != '^') return base;
    get();
    skip_ws();
    bool neg = peek() == '-' && (get(), true);
    long k = integer();
    if (neg) {
      // negative powers are only defined for scalars
      if (base.size() != 1 || !base.terms().begin()->first.empty())
        throw std::invalid_argument("negative power of a non-scalar");
      return fnalg::FnAlgElem::unit(base.terms().begin()->second.pow(-k));
    }
    return alg_.pow(base, k);
  }
  fnalg::FnAlgElem atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      auto r = sum();
      expect(')');
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = integer();
      skip_ws();
      if (peek() == '/') {
        get();
        long den = integer();
        return fnalg::FnAlgElem::unit(RatFunc(Rat(num, den)));
      }
      return fnalg::FnAlgElem::unit(RatFunc(Rat(num)));
    }
    std::string name = identifier();
    if (name == "t") return fnalg::FnAlgElem::unit(RatFunc::t());
    if (name == "u") {
      expect('(');
      long i = integer();
      expect(',');
      long j = integer();
      expect(')');
      return alg_.gen(static_cast<int>(i), static_cast<int>(j));
    }
    if (name == "star") {
      expect('(');
      auto r = sum();
      expect(')');
      return alg_.star(r);
    }
    if (name == "S") {
      expect('(');
      auto r = sum();
      expect(')');
      return alg_.antipode(r);
    }
    if (name == "qdet") {
      expect('(');
      long k = integer();
      expect(')');
      if (k != alg_.rank())
        throw std::invalid_argument("qdet rank disagrees with the algebra context");
      return alg_.normal_form(alg_.qdet_raw());
    }
    throw std::invalid_argument("unknown token '" + name + "'");
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw std::invalid_argument("expected integer at " + std::to_string(pos_));
    return std::stol(text_.substr(start, pos_ - start));
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])))) ++pos_;
    if (start == pos_)
      throw std::invalid_argument("expected identifier at position " + std::to_string(pos_));
    return text_.substr(start, pos_ - start);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }
  void expect(char c) {
    skip_ws();
    if (peek() != c)
      throw std::invalid_argument(std::string("expected '") + c + "' at position " +
                                  std::to_string(pos_));
    get();
  }

  const fnalg::Algebra& alg_;
  std::string text_;
  std::size_t pos_ = 0;
};

inline fnalg::FnAlgElem parse_algebra_expr(const fnalg::Algebra& alg, const std::string& text) {
  return AlgebraExprParser(alg, text).parse();
}

/// Parser for module expressions: fund(n), sl2(m), tensor(R,R),
/// hw(R, m1,...,mk), dual(R).
class RepExprParser {
 public:
  explicit RepExprParser(std::string text) : text_(std::move(text)) {}

  Rep parse() {
    Rep r = expr();
    skip_ws();
    if (pos_ != text_.size()) throw std::invalid_argument("trailing input in module expression");
    return r;
  }

 private:
  Rep expr() {
    std::string name = identifier();
    if (name == "fund") {
      expect('(');
      long n = integer();
      expect(')');
      return fundamental_rep(static_cast<int>(n));
    }
    if (name == "sl2") {
      expect('(');
      long m = integer();
      expect(')');
      return sl2_module(m);
    }
    if (name == "tensor") {
      expect('(');
      Rep a = expr();
      expect(',');
      Rep b = expr();
      expect(')');
      return tensor_rep(a, b);
    }
    if (name == "dual") {
      expect('(');
      Rep a = expr();
      expect(')');
      return dual_rep(a, polarization_gram(a)).rep;
    }
    if (name == "hw") {
      expect('(');
      Rep a = expr();
      expect(',');
      std::vector<long> coords;
      coords.push_back(signed_integer());
      while (true) {
        skip_ws();
        if (peek() != ',') break;
        get();
        coords.push_back(signed_integer());
      }
      expect(')');
      return highest_weight_submodule(a, Weight(coords)).rep;
    }
    throw std::invalid_argument("unknown module constructor '" + name + "'");
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw std::invalid_argument("expected integer");
    return std::stol(text_.substr(start, pos_ - start));
  }
  long signed_integer() {
    skip_ws();
    bool neg = peek() == '-' && (get(), true);
    long v = integer();
    return neg ? -v : v;
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_]))))
      ++pos_;
    if (start == pos_) throw std::invalid_argument("expected identifier");
    return text_.substr(start, pos_ - start);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }
  void expect(char c) {
    skip_ws();
    if (peek() != c)
      throw std::invalid_argument(std::string("expected '") + c + "' in module expression");
    get();
  }

  std::string text_;
  std::size_t pos_ = 0;
};

inline Rep parse_rep_expr(const std::string& text) { return RepExprParser(text).parse(); }

}  // namespace cli
}  // namespace qcrystal
