#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "metallic/quadfield.hpp"
#include "testutil.hpp"

using metallic::QuadNum;
using metallic::Rat;

TEST_CASE("defining relation beta^2 = n*beta + 1") {
  QuadNum beta = QuadNum::beta(3);
  CHECK(beta * beta == QuadNum(1, 3, 3));
  CHECK(QuadNum::rational(1, 3) / beta == QuadNum(-3, 1, 3));
  CHECK((QuadNum::rational(3, 3) - beta) * beta == QuadNum::rational(-1, 3));
}

TEST_CASE("conjugate identities for every n in 1..12") {
  for (int n = 1; n <= 12; ++n) {
    QuadNum beta = QuadNum::beta(n);
    QuadNum star = QuadNum::beta_star(n);
    CHECK(QuadNum::beta_inv(n) == beta - QuadNum::rational(n, n));
    CHECK(beta.inverse() == QuadNum::beta_inv(n));
    CHECK(star * beta == QuadNum::rational(-1, n));
    CHECK(beta + star == QuadNum::rational(n, n));
    CHECK(star == -QuadNum::beta_inv(n));
  }
}

TEST_CASE("exact sign") {
  QuadNum beta = QuadNum::beta(3);
  CHECK((QuadNum::rational(1, 3) - (beta - QuadNum::rational(3, 3))).sign() == +1);
  CHECK((beta - QuadNum::rational(3, 3)).sign() == +1);
  CHECK(QuadNum(0, 0, 3).sign() == 0);
  CHECK((-beta).sign() == -1);
  CHECK(QuadNum::beta_star(3).sign() == -1);
}

TEST_CASE("sign agrees with rational comparison") {
  auto g = testutil::rng(11);
  for (int i = 0; i < 200; ++i) {
    Rat p = testutil::rand_rat(g), q = testutil::rand_rat(g);
    int want = p < q ? -1 : (p == q ? 0 : +1);
    CHECK((QuadNum::rational(p, 4) - QuadNum::rational(q, 4)).sign() == want);
  }
}

TEST_CASE("floor and frac") {
  QuadNum beta = QuadNum::beta(3);
  CHECK(beta.floor() == 3);
  CHECK((beta - QuadNum::rational(3, 3)).floor() == 0);
  CHECK((beta - QuadNum::rational(3, 3)).frac() == QuadNum(-3, 1, 3));
  // frozen oracle: 2*beta for n=3 lies in (6, 20/3) by the first convergents
  CHECK((beta + beta).floor() == 6);
  CHECK(QuadNum::beta_star(3).floor() == -1);
  CHECK(QuadNum::rational(7, 3).floor() == 7);
  CHECK(QuadNum::rational(Rat(-1, 2), 3).floor() == -1);
  CHECK(QuadNum::rational(Rat(-1, 2), 3).frac() == QuadNum::rational(Rat(1, 2), 3));
}

TEST_CASE("x = floor(x) + frac(x) with 0 <= frac < 1") {
  auto g = testutil::rng(12);
  for (int n : {1, 2, 3, 7, 12}) {
    for (int i = 0; i < 100; ++i) {
      QuadNum x = testutil::rand_quad(g, n);
      QuadNum f = x.frac();
      CHECK(f.sign() >= 0);
      CHECK((f - QuadNum::rational(1, n)).sign() < 0);
      CHECK(QuadNum::rational(Rat(x.floor()), n) + f == x);
    }
  }
}

TEST_CASE("pow covers negative exponents") {
  for (int n : {1, 2, 3}) {
    QuadNum beta = QuadNum::beta(n);
    CHECK(metallic::pow(beta, -2) == QuadNum::beta_inv(n) * QuadNum::beta_inv(n));
    CHECK(metallic::pow(beta, 0) == QuadNum::rational(1, n));
    CHECK(metallic::pow(beta, 3) == beta * beta * beta);
  }
}

TEST_CASE("field mismatch and division by zero are hard errors") {
  CHECK_THROWS_AS(QuadNum::beta(2) + QuadNum::beta(3), std::invalid_argument);
  CHECK_THROWS_AS(QuadNum() + QuadNum::beta(3), std::invalid_argument);
  CHECK_THROWS_AS(QuadNum::beta(3) / QuadNum(0, 0, 3), std::domain_error);
  CHECK_THROWS_AS(QuadNum(0, 0, 0), std::invalid_argument);
}

TEST_CASE("expression parse/render round-trip") {
  auto g = testutil::rng(13);
  for (int i = 0; i < 200; ++i) {
    QuadNum x = testutil::rand_quad(g, 3);
    CHECK(metallic::parse_expr(metallic::expr_str(x), 3) == x);
  }
  CHECK(metallic::parse_expr("1/2", 3) == QuadNum::rational(Rat(1, 2), 3));
  CHECK(metallic::parse_expr("-1/2+2/3*beta", 3) == QuadNum(Rat(-1, 2), Rat(2, 3), 3));
  CHECK(metallic::parse_expr("beta", 3) == QuadNum::beta(3));
  CHECK(metallic::parse_expr("-beta", 3) == -QuadNum::beta(3));
  CHECK(metallic::parse_expr("3*beta", 3) == QuadNum(0, 3, 3));
  CHECK(metallic::parse_expr(" 1/7 + 1/7*beta ", 3) == QuadNum(Rat(1, 7), Rat(1, 7), 3));
  CHECK(metallic::parse_expr("0", 3) == QuadNum(0, 0, 3));
  CHECK_THROWS_AS(metallic::parse_expr("x", 3), std::invalid_argument);
  CHECK_THROWS_AS(metallic::parse_expr("1/2 3*beta", 3), std::invalid_argument);
  CHECK_THROWS_AS(metallic::parse_expr("1/0", 3), std::invalid_argument);
}

TEST_CASE("rational strings are lowest terms with positive denominator") {
  Rat q(4, -6);
  q.canonicalize();
  CHECK(metallic::rat_str(q) == "-2/3");
  CHECK(metallic::parse_rat("-2/3") == q);
  CHECK(metallic::rat_str(Rat(0)) == "0/1");
}
