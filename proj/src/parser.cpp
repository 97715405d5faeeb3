#include "skein/parser.hpp"

#include <cctype>

namespace skein {

namespace {

class Parser {
 public:
  Parser(const std::string& src, int n) : src_(src), n_(n) {}

  GenPolynomial run() {
    GenPolynomial p = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(unsigned(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  GenPolynomial expr() {
    bool neg = eat('-');
    GenPolynomial acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc += -term();
      else
        return acc;
    }
  }

  GenPolynomial term() {
    GenPolynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  GenPolynomial factor() {
    const char c = peek();
    GenPolynomial base;
    bool is_gen = false;
    if (c == 't') {
      base = GenPolynomial::gen(generator());
      is_gen = true;
    } else {
      base = scalar_atom();
    }
    if (!eat('^')) return base;
    const long long e = integer("exponent expected after '^'");
    if (is_gen) {
      if (e < 0) fail("generators take nonnegative exponents");
      return poly_pow(base, e);
    }
    if (e >= 0) return poly_pow(base, e);
    const auto& t = base.terms();
    if (t.size() == 1 && t.begin()->first.empty() && t.begin()->second.is_unit())
      return GenPolynomial::scalar(t.begin()->second.pow(int(e)));
    fail("negative exponent of a non-unit scalar");
  }

  GenPolynomial poly_pow(const GenPolynomial& base, long long e) {
    GenPolynomial r = GenPolynomial::one();
    for (long long i = 0; i < e; ++i) r = r * base;
    return r;
  }

  Gen generator() {
    skip_ws();
    const size_t start = pos_;
    ++pos_;  // 't'
    if (pos_ >= src_.size() || !std::isdigit(unsigned(src_[pos_]))) {
      pos_ = start;
      fail("generator needs puncture digits after 't'");
    }
    if (src_[pos_] == '0') {
      ++pos_;
      if (pos_ < src_.size() && std::isdigit(unsigned(src_[pos_]))) {
        pos_ = start;
        fail("no digits may follow 't0'");
      }
      return full_gen(n_);
    }
    Gen g = 0;
    int prev = 0;
    while (pos_ < src_.size() && std::isdigit(unsigned(src_[pos_]))) {
      const int v = src_[pos_] - '0';
      if (v <= prev) {
        pos_ = start;
        fail("puncture digits must be strictly increasing");
      }
      if (v > n_) {
        pos_ = start;
        fail("puncture index out of range");
      }
      g |= Gen(1u << (v - 1));
      prev = v;
      ++pos_;
    }
    return g;
  }

  GenPolynomial scalar_atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("expression ends where a factor is expected");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      GenPolynomial inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'q') {
      ++pos_;
      return GenPolynomial::scalar(Laurent::q());
    }
    if (c == 's') {
      ++pos_;
      return GenPolynomial::scalar(Laurent::s());
    }
    if (c == 'A') {
      ++pos_;
      return GenPolynomial::scalar(Laurent::alpha());
    }
    if (std::isdigit(unsigned(c)) || c == '-') {
      const long long v = integer("integer literal expected");
      return GenPolynomial::scalar(Laurent(v));
    }
    fail("expected a generator, scalar, or '('");
  }

  long long integer(const std::string& what) {
    skip_ws();
    const size_t start = pos_;
    bool neg = false;
    if (pos_ < src_.size() && src_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= src_.size() || !std::isdigit(unsigned(src_[pos_]))) {
      pos_ = start;
      fail(what);
    }
    long long v = 0;
    while (pos_ < src_.size() && std::isdigit(unsigned(src_[pos_]))) {
      v = v * 10 + (src_[pos_] - '0');
      if (v > 1000000000) fail("integer literal too large");
      ++pos_;
    }
    return neg ? -v : v;
  }

  const std::string& src_;
  int n_;
  size_t pos_ = 0;
};

}  // namespace

GenPolynomial parse_expression(const std::string& src, int n) {
  return Parser(src, n).run();
}

}  // namespace skein
