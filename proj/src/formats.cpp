#include "cremona/formats.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "cremona/parse.hpp"

namespace cremona {

namespace {

std::string trim(const std::string &s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> content_lines(const std::string &text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    lines.push_back(std::move(t));
  }
  return lines;
}

// "x<i>" prefix; returns the index and advances pos past it
int parse_var_index(const std::string &s, std::size_t &pos, int n) {
  if (pos >= s.size() || s[pos] != 'x')
    fail(Errc::Syntax, "expected 'x<i>' in '" + s + "'", pos);
  ++pos;
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    ++pos;
  if (pos == start)
    fail(Errc::Syntax, "expected variable index in '" + s + "'", start);
  int i = std::stoi(s.substr(start, pos - start));
  if (i < 1 || i > n)
    fail(Errc::VariableOutOfRange,
         "x" + std::to_string(i) + " with n=" + std::to_string(n), start);
  return i;
}

} // namespace

Derivation parse_derivation(const std::string &text, int n) {
  std::vector<Poly> images(n, Poly::zero(n));
  std::vector<bool> seen(n, false);
  for (const auto &line : content_lines(text)) {
    if (line.empty() || (line[0] != 'D' && line[0] != 'd'))
      fail(Errc::Syntax, "expected 'D x<i> = <poly>' in '" + line + "'");
    std::size_t pos = 1;
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
      ++pos;
    int i = parse_var_index(line, pos, n);
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
      ++pos;
    if (pos >= line.size() || line[pos] != '=')
      fail(Errc::Syntax, "expected '=' in '" + line + "'", pos);
    ++pos;
    if (seen[i - 1])
      fail(Errc::Syntax, "duplicate image for x" + std::to_string(i));
    seen[i - 1] = true;
    images[i - 1] = parse_poly(line.substr(pos), n);
  }
  return Derivation(n, std::move(images));
}

std::string format_derivation(const Derivation &d) {
  std::ostringstream out;
  for (int i = 1; i <= d.vars(); ++i) {
    if (d.image(i).is_zero()) continue;
    out << "D x" << i << " = " << format_poly(d.image(i)) << '\n';
  }
  return out.str();
}

std::string format_derivation_inline(const Derivation &d) {
  std::string s;
  for (int i = 1; i <= d.vars(); ++i) {
    if (d.image(i).is_zero()) continue;
    if (!s.empty()) s += "; ";
    s += "D x" + std::to_string(i) + " = " + format_poly(d.image(i));
  }
  return s.empty() ? "0" : s;
}

PolyMap parse_poly_map(const std::string &text, int n) {
  std::vector<Poly> images(n, Poly::zero(n));
  std::vector<bool> seen(n, false);
  for (const auto &line : content_lines(text)) {
    std::size_t pos = 0;
    int i = parse_var_index(line, pos, n);
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
      ++pos;
    if (pos + 1 >= line.size() || line[pos] != '-' || line[pos + 1] != '>')
      fail(Errc::Syntax, "expected '->' in '" + line + "'", pos);
    pos += 2;
    if (seen[i - 1])
      fail(Errc::Syntax, "duplicate image for x" + std::to_string(i));
    seen[i - 1] = true;
    images[i - 1] = parse_poly(line.substr(pos), n);
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i])
      fail(Errc::Syntax, "missing image for x" + std::to_string(i + 1));
  return PolyMap(n, std::move(images));
}

std::string format_poly_map(const PolyMap &m) {
  std::ostringstream out;
  for (int i = 1; i <= m.vars(); ++i)
    out << 'x' << i << " -> " << format_poly(m.image(i)) << '\n';
  return out.str();
}

namespace {

class VectorScanner {
public:
  explicit VectorScanner(const std::string &s) : s_(s) {}

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c)
      fail(Errc::Syntax, std::string("expected '") + c + "' in '" + s_ + "'",
           pos_);
    ++pos_;
  }

  bool peek_is(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Scalar scan_scalar() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ']')
      ++pos_;
    return parse_scalar(trim(s_.substr(start, pos_ - start)));
  }

  void finish() {
    skip();
    if (pos_ != s_.size())
      fail(Errc::Syntax, "trailing characters in '" + s_ + "'", pos_);
  }

private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  const std::string &s_;
  std::size_t pos_ = 0;
};

std::vector<Scalar> scan_row(VectorScanner &sc) {
  std::vector<Scalar> row;
  sc.expect('[');
  if (!sc.peek_is(']')) {
    row.push_back(sc.scan_scalar());
    while (sc.peek_is(',')) {
      sc.expect(',');
      row.push_back(sc.scan_scalar());
    }
  }
  sc.expect(']');
  return row;
}

} // namespace

QMatrix parse_matrix(const std::string &text) {
  VectorScanner sc(text);
  QMatrix m;
  sc.expect('[');
  m.push_back(scan_row(sc));
  while (sc.peek_is(',')) {
    sc.expect(',');
    m.push_back(scan_row(sc));
  }
  sc.expect(']');
  sc.finish();
  for (const auto &row : m)
    if (row.size() != m[0].size())
      fail(Errc::Syntax, "ragged matrix rows in '" + text + "'");
  return m;
}

std::string format_matrix(const QMatrix &m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ',';
    s += '[';
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) s += ',';
      s += format_scalar(m[i][j]);
    }
    s += ']';
  }
  s += ']';
  return s;
}

std::vector<Scalar> parse_scalar_vector(const std::string &text) {
  VectorScanner sc(text);
  auto v = scan_row(sc);
  sc.finish();
  return v;
}

std::string format_scalar_vector(const std::vector<Scalar> &v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += format_scalar(v[i]);
  }
  s += ']';
  return s;
}

namespace {

std::vector<std::string> split_semicolons(const std::string &s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ';') {
      std::string part = trim(s.substr(start, i - start));
      if (!part.empty()) parts.push_back(std::move(part));
      start = i + 1;
    }
  }
  return parts;
}

Factor parse_exp_factor(const std::string &body, int n, int iter_bound,
                        int deg_bound) {
  Scalar t(1);
  bool have_f = false;
  Poly f = Poly::constant(n, Scalar(1));
  std::vector<Poly> images(n, Poly::zero(n));
  for (const auto &part : split_semicolons(body)) {
    if (part.rfind("t=", 0) == 0) {
      t = parse_scalar(part.substr(2));
    } else if (part.rfind("f=", 0) == 0) {
      f = parse_poly(part.substr(2), n);
      have_f = true;
    } else if (part[0] == 'D' || part[0] == 'd') {
      std::size_t pos = 1;
      while (pos < part.size() &&
             std::isspace(static_cast<unsigned char>(part[pos])))
        ++pos;
      int i = parse_var_index(part, pos, n);
      while (pos < part.size() &&
             std::isspace(static_cast<unsigned char>(part[pos])))
        ++pos;
      if (pos >= part.size() || part[pos] != '=')
        fail(Errc::Syntax, "expected '=' in '" + part + "'", pos);
      images[i - 1] = parse_poly(part.substr(pos + 1), n);
    } else {
      fail(Errc::Syntax, "unrecognized exp part '" + part + "'");
    }
  }
  Derivation d(n, std::move(images));
  auto cert = check_locally_nilpotent(d, iter_bound, deg_bound);
  if (!cert.proven())
    fail(Errc::UncertifiedInput,
         "exp factor derivation is not certified locally nilpotent "
         "(verdict " +
             std::string(cert.kind == NilpotencyCertificate::Kind::Disproven
                             ? "Disproven"
                             : "Unknown") +
             ")");
  if (have_f) {
    auto [fd, fd_cert] = scale_by_kernel(d, cert, f);
    return Factor::exp_lnd(t, std::move(fd), std::move(fd_cert));
  }
  return Factor::exp_lnd(t, std::move(d), std::move(cert));
}

} // namespace

FactoredAut parse_factored_word(const std::string &text, int n, int iter_bound,
                                int deg_bound) {
  std::vector<Factor> word;
  for (const auto &line : content_lines(text)) {
    auto colon = line.find(':');
    if (colon == std::string::npos)
      fail(Errc::Syntax, "expected '<kind>: ...' in '" + line + "'");
    std::string kind = trim(line.substr(0, colon));
    std::string body = trim(line.substr(colon + 1));
    if (kind == "linear") {
      QMatrix m = parse_matrix(body);
      if (static_cast<int>(m.size()) != n)
        fail(Errc::ArityMismatch, "linear factor size " +
                                      std::to_string(m.size()) + " with n=" +
                                      std::to_string(n));
      word.push_back(Factor::linear(std::move(m)));
    } else if (kind == "translate") {
      auto v = parse_scalar_vector(body);
      if (static_cast<int>(v.size()) != n)
        fail(Errc::ArityMismatch, "translation size " +
                                      std::to_string(v.size()) + " with n=" +
                                      std::to_string(n));
      word.push_back(Factor::translation(std::move(v)));
    } else if (kind == "exp") {
      word.push_back(parse_exp_factor(body, n, iter_bound, deg_bound));
    } else {
      fail(Errc::Syntax, "unknown factor kind '" + kind + "'");
    }
  }
  return FactoredAut(n, std::move(word));
}

std::string format_factored_word(const FactoredAut &w) {
  std::ostringstream out;
  for (const auto &factor : w.word()) {
    switch (factor.kind()) {
    case Factor::Kind::Linear:
      out << "linear: " << format_matrix(factor.as_linear().mat) << '\n';
      break;
    case Factor::Kind::Translation:
      out << "translate: "
          << format_scalar_vector(factor.as_translation().shift) << '\n';
      break;
    case Factor::Kind::ExpLnd: {
      const auto &e = factor.as_exp();
      out << "exp: t=" << format_scalar(e.t);
      for (int i = 1; i <= e.d.vars(); ++i) {
        if (e.d.image(i).is_zero()) continue;
        out << "; D x" << i << '=' << format_poly(e.d.image(i));
      }
      out << '\n';
      break;
    }
    }
  }
  return out.str();
}

} // namespace cremona
