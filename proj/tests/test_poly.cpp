#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cremona/parse.hpp"
#include "cremona/poly.hpp"
#include "support.hpp"

using namespace cremona;
using namespace testsupport;

TEST_CASE("parse: first Nagata component round-trips") {
  Poly f = parse_poly("x1 - 2*x2*(x3*x1 + x2^2) - x3*(x3*x1 + x2^2)^2", 3);
  CHECK(f.degree() == 5);
  CHECK(format_poly(f) ==
        "-x1^2*x3^3 - 2*x1*x2^2*x3^2 - x2^4*x3 - 2*x1*x2*x3 - 2*x2^3 + x1");
  CHECK(parse_poly(format_poly(f), 3) == f);
}

TEST_CASE("parse: zero and term collection") {
  CHECK(parse_poly("0", 2).is_zero());
  CHECK(format_poly(parse_poly("0", 2)) == "0");
  // 3/2*x1^2 - x1^2/2 collects to x1^2
  Poly f = parse_poly("3/2*x1^2 - x1^2/2", 1);
  CHECK(f == parse_poly("x1^2", 1));
  CHECK(format_poly(f) == "x1^2");
}

TEST_CASE("parse: errors carry byte offsets") {
  CHECK_THROWS_WITH_AS(parse_poly("2x1", 2), doctest::Contains("unexpected"),
                       Error);
  try {
    parse_poly("x1 + x5", 3);
    FAIL("expected VariableOutOfRange");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::VariableOutOfRange);
    CHECK(e.offset() == 5);
  }
  try {
    parse_poly("x1 + ", 3);
    FAIL("expected SyntaxError");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::Syntax);
  }
  CHECK_THROWS_AS(parse_poly("x0 + 1", 2), Error);
  CHECK_THROWS_AS(parse_poly("1/0", 2), Error);
  CHECK_THROWS_AS(parse_poly("(x1", 2), Error);
  CHECK_THROWS_AS(parse_poly("x1/x2", 2), Error);
}

TEST_CASE("arith: golden products") {
  Poly a = parse_poly("x1 + x2", 2), b = parse_poly("x1 - x2", 2);
  CHECK(a * b == parse_poly("x1^2 - x2^2", 2));
  CHECK(format_poly(a * b) == "x1^2 - x2^2");

  // the square inside the Nagata formula
  Poly f = parse_poly("x3*x1 + x2^2", 3);
  CHECK(f * f == parse_poly("x3^2*x1^2 + 2*x3*x1*x2^2 + x2^4", 3));
  CHECK(format_poly(f * f) == "x1^2*x3^2 + 2*x1*x2^2*x3 + x2^4");

  Rng rng(7);
  Poly g = random_poly(rng, 3, 6, 4);
  CHECK(g * Scalar(1) == g);
}

TEST_CASE("arith: ring laws on random inputs") {
  Rng rng(42);
  for (int iter = 0; iter < 60; ++iter) {
    int n = static_cast<int>(rand_range(rng, 1, 4));
    Poly f = random_poly(rng, n, 8, 6);
    Poly g = random_poly(rng, n, 8, 6);
    Poly h = random_poly(rng, n, 8, 6);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("arith: products agree with point evaluation") {
  Rng rng(43);
  for (int iter = 0; iter < 40; ++iter) {
    int n = static_cast<int>(rand_range(rng, 1, 3));
    Poly f = random_poly(rng, n, 5, 4);
    Poly g = random_poly(rng, n, 5, 4);
    auto pt = random_point(rng, n);
    CHECK(eval_poly(f * g, pt) == eval_poly(f, pt) * eval_poly(g, pt));
    CHECK(eval_poly(f + g, pt) == eval_poly(f, pt) + eval_poly(g, pt));
  }
}

TEST_CASE("arith: arity mismatch rejected") {
  Poly f = parse_poly("x1", 1), g = parse_poly("x2", 2);
  CHECK_THROWS_AS(f + g, Error);
  CHECK_THROWS_AS(f *g, Error);
}

TEST_CASE("partial: golden cases") {
  CHECK(parse_poly("x1^2", 1).partial(1) == parse_poly("2*x1", 1));
  CHECK(parse_poly("x3*x1 + x2^2", 3).partial(2) == parse_poly("2*x2", 3));
  CHECK(parse_poly("x1*x2", 3).partial(3).is_zero());
  CHECK_THROWS_AS(parse_poly("x1", 2).partial(3), Error);
}

TEST_CASE("partial: Leibniz rule on random inputs") {
  Rng rng(44);
  for (int iter = 0; iter < 40; ++iter) {
    int n = static_cast<int>(rand_range(rng, 1, 4));
    int i = static_cast<int>(rand_range(rng, 1, n));
    Poly f = random_poly(rng, n, 6, 5);
    Poly g = random_poly(rng, n, 6, 5);
    CHECK((f * g).partial(i) == f * g.partial(i) + g * f.partial(i));
  }
}

TEST_CASE("substitute: golden cases") {
  Poly f = parse_poly("x1^2", 2);
  std::vector<Poly> images = {parse_poly("x1 + x2", 2), parse_poly("x2", 2)};
  CHECK(f.substitute(images) == parse_poly("x1^2 + 2*x1*x2 + x2^2", 2));

  std::vector<Poly> id3 = {Poly::variable(3, 1), Poly::variable(3, 2),
                           Poly::variable(3, 3)};
  CHECK(parse_poly("x1", 3).substitute(id3) == parse_poly("x1", 3));

  // the Nagata map fixes x3*x1 + x2^2
  Poly kernel = parse_poly("x3*x1 + x2^2", 3);
  std::vector<Poly> nagata = {
      parse_poly("x1 - 2*x2*(x3*x1 + x2^2) - x3*(x3*x1 + x2^2)^2", 3),
      parse_poly("x2 + x3*(x3*x1 + x2^2)", 3), parse_poly("x3", 3)};
  CHECK(kernel.substitute(nagata) == kernel);
}

TEST_CASE("substitute: agrees with point evaluation") {
  Rng rng(45);
  for (int iter = 0; iter < 30; ++iter) {
    int n = static_cast<int>(rand_range(rng, 1, 3));
    int m = static_cast<int>(rand_range(rng, 1, 3));
    Poly f = random_poly(rng, n, 5, 4);
    std::vector<Poly> images;
    for (int i = 0; i < n; ++i) images.push_back(random_poly(rng, m, 4, 3));
    auto pt = random_point(rng, m);
    std::vector<Scalar> mapped;
    for (const auto &img : images) mapped.push_back(eval_poly(img, pt));
    CHECK(eval_poly(f.substitute(images), pt) == eval_poly(f, mapped));
  }
}

TEST_CASE("format: canonical ordering and round-trip") {
  // graded lex descending, x1 > x2 > x3
  Poly f = parse_poly("2*x3*x1*x2^2 + x2^4 + x3^2*x1^2", 3);
  CHECK(format_poly(f) == "x1^2*x3^2 + 2*x1*x2^2*x3 + x2^4");
  CHECK(format_poly(parse_poly("x1^2 - x2^2", 2)) == "x1^2 - x2^2");

  Rng rng(46);
  for (int iter = 0; iter < 60; ++iter) {
    int n = static_cast<int>(rand_range(rng, 1, 4));
    Poly g = random_poly(rng, n, 8, 6);
    CHECK(parse_poly(format_poly(g), n) == g);
  }
}

TEST_CASE("divide_exact: recovers factors") {
  Rng rng(47);
  for (int iter = 0; iter < 30; ++iter) {
    int n = static_cast<int>(rand_range(rng, 1, 3));
    Poly f = random_nonzero_poly(rng, n, 4, 3);
    Poly g = random_nonzero_poly(rng, n, 4, 3);
    Poly q(n);
    REQUIRE(divide_exact(f * g, g, q));
    CHECK(q == f);
  }
  Poly q(2);
  CHECK_FALSE(divide_exact(parse_poly("x1^2 + 1", 2), parse_poly("x2", 2), q));
}

TEST_CASE("term cap triggers TermLimitExceeded") {
  std::size_t old = max_poly_terms();
  set_max_poly_terms(8);
  Poly f(1);
  for (int i = 0; i < 6; ++i)
    f.add_term(Monomial{static_cast<std::uint32_t>(i)}, Scalar(1));
  CHECK_THROWS_AS(f * f, Error);
  set_max_poly_terms(old);
  CHECK_NOTHROW(f * f);
}
