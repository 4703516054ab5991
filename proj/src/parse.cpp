#include "cremona/parse.hpp"

#include <cctype>

namespace cremona {

namespace {

class PolyParser {
public:
  PolyParser(std::string_view text, int n) : text_(text), n_(n) {}

  Poly run() {
    Poly p = parse_expr();
    skip_ws();
    if (pos_ != text_.size())
      fail(Errc::Syntax, "unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

private:
  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // digits, no sign; pos_ already at the first digit
  Integer parse_uint(const char *what) {
    skip_ws();
    std::size_t start = pos_;
    std::string digits;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      digits += text_[pos_++];
    if (digits.empty())
      fail(Errc::Syntax, std::string("expected ") + what, start);
    return Integer(digits);
  }

  Poly parse_expr() {
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = text_[pos_++] == '-';
    Poly p = parse_term();
    if (negative) p = -p;
    for (;;) {
      char op = peek();
      if (op != '+' && op != '-') break;
      ++pos_;
      Poly t = parse_term();
      if (op == '+') p += t; else p -= t;
    }
    return p;
  }

  Poly parse_term() {
    Poly p = parse_factor();
    for (;;) {
      char op = peek();
      if (op != '*' && op != '/') break;
      ++pos_;
      std::size_t at = pos_;
      Poly f = parse_factor();
      if (op == '*') {
        p *= f;
      } else {
        if (!f.is_constant())
          fail(Errc::Syntax, "division by a non-constant", at);
        Scalar d = f.constant_term();
        if (d == 0) fail(Errc::Syntax, "division by zero", at);
        p = p * (Scalar(1) / d);
      }
    }
    return p;
  }

  Poly parse_factor() {
    Poly p = parse_primary();
    while (peek() == '^') {
      ++pos_;
      std::size_t at = pos_;
      Integer e = parse_uint("exponent");
      if (e > 100000) fail(Errc::Syntax, "exponent too large", at);
      p = p.pow(static_cast<unsigned>(e.get_ui()));
    }
    return p;
  }

  Poly parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail(Errc::Syntax, "unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = parse_expr();
      if (!accept(')')) fail(Errc::Syntax, "expected ')'", pos_);
      return p;
    }
    if (c == 'x') {
      std::size_t at = pos_;
      ++pos_;
      // index digits must follow immediately
      if (pos_ >= text_.size() ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail(Errc::Syntax, "expected variable index after 'x'", pos_);
      Integer idx = parse_uint("variable index");
      if (idx < 1 || idx > n_)
        fail(Errc::VariableOutOfRange,
             "x" + idx.get_str() + " with n=" + std::to_string(n_), at);
      return Poly::variable(n_, static_cast<int>(idx.get_si()));
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      bool negative = false;
      if (c == '-' || c == '+') {
        negative = c == '-';
        ++pos_;
        skip_ws();
      }
      Integer num = parse_uint("number");
      Integer den(1);
      // a '/' directly after a literal binds as part of the rational
      if (peek() == '/') {
        std::size_t save = pos_;
        ++pos_;
        skip_ws();
        if (pos_ < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          den = parse_uint("denominator");
          if (den == 0) fail(Errc::Syntax, "zero denominator", save + 1);
        } else {
          pos_ = save; // not a rational: leave '/' for the term level
        }
      }
      Scalar s(num, den);
      s.canonicalize();
      if (negative) s = -s;
      return Poly::constant(n_, s);
    }
    fail(Errc::Syntax, "unexpected character '" + std::string(1, c) + "'", pos_);
  }
};

} // namespace

Poly parse_poly(std::string_view text, int n) {
  return PolyParser(text, n).run();
}

} // namespace cremona
