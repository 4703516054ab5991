#include "cremona/scalar.hpp"

#include <cctype>

#include "cremona/errors.hpp"

namespace cremona {

std::string format_scalar(const Scalar &s) { return s.get_str(); }

Scalar parse_scalar(const std::string &text) {
  std::size_t i = 0, n = text.size();
  auto skip = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip();
  bool negative = false;
  if (i < n && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  skip();
  auto digits = [&]() -> std::string {
    std::string d;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) d += text[i++];
    if (d.empty()) fail(Errc::Syntax, "expected digits in rational '" + text + "'", i);
    return d;
  };
  Integer num(digits());
  Integer den(1);
  skip();
  if (i < n && text[i] == '/') {
    ++i;
    skip();
    den = Integer(digits());
    if (den == 0) fail(Errc::Syntax, "zero denominator in '" + text + "'", i);
  }
  skip();
  if (i != n) fail(Errc::Syntax, "trailing characters in rational '" + text + "'", i);
  Scalar s(num, den);
  s.canonicalize();
  if (negative) s = -s;
  return s;
}

Scalar scalar_pow(const Scalar &base, std::int64_t e) {
  if (e == 0) return Scalar(1);
  Scalar b = base;
  if (e < 0) {
    if (b == 0) fail(Errc::Syntax, "zero base with negative exponent");
    b = Scalar(1) / b;
    e = -e;
  }
  Scalar r(1);
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Integer factorial(unsigned k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

} // namespace cremona
