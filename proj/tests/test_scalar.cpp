#include "w22/errors.hpp"
#include "w22/matrix.hpp"
#include "w22/scalar.hpp"

#include <doctest.h>

#include <random>

using namespace w22;

namespace {

Polynomial random_poly(std::mt19937& rng, int terms) {
  std::uniform_int_distribution<int> coef(-9, 9), den(1, 4), ex(0, 3);
  Polynomial p;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (auto& e : m.exp)
      e = static_cast<std::uint32_t>(ex(rng));
    p += Polynomial::term(m, Rational(coef(rng), den(rng)));
  }
  return p;
}

} // namespace

TEST_CASE("rational parsing is exact and strict") {
  CHECK(Rational::parse("-3/2") == Rational(-3, 2));
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational::parse("+5") == Rational(5));
  CHECK(Rational::parse("0/9").str() == "0");
  CHECK(Rational::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
  for (const char* bad : {"1.5", "1e3", "", "/2", "3/", "3/0", "3/-2", " 1", "0x10", "nan", "1/2/3"})
    CHECK_THROWS_AS(Rational::parse(bad), ParseError);
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational(4, -6).str() == "-2/3");
}

TEST_CASE("polynomial canonical strings") {
  auto lam = Polynomial::variable(Var::lambda);
  auto c = Polynomial::variable(Var::c);
  auto c0 = Polynomial::variable(Var::c0);
  auto c1 = Polynomial::variable(Var::c1);
  CHECK(Polynomial().str() == "0");
  CHECK((Polynomial(-4) * c0 * c0).str() == "-4*c0^2");
  CHECK((Polynomial(-4) * lam + Polynomial(Rational(1, 2)) * c).str() == "-4*lambda+1/2*c");
  CHECK((c1 + c0 * c0 + Polynomial(3)).str() == "c0^2+c1+3");
  CHECK((-c).str() == "-c");
  CHECK((lam * c1 - lam * c0).str() == "-lambda*c0+lambda*c1");
}

TEST_CASE("polynomial parsing accepts canonical and permuted forms") {
  CHECK(Polynomial::parse("-4*c0^2") == Polynomial(-4) * Polynomial::variable(Var::c0) * Polynomial::variable(Var::c0));
  CHECK(Polynomial::parse("c0*2*c0+1-1") == Polynomial::parse("2*c0^2"));
  CHECK(Polynomial::parse("0").is_zero());
  for (const char* bad : {"", "x", "1.5*c", "c^", "c0 c1", "+", "c0**2", "2e3"})
    CHECK_THROWS_AS(Polynomial::parse(bad), ParseError);
}

TEST_CASE("polynomial string round trip (property)") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto p = random_poly(rng, i % 7);
    CHECK(Polynomial::parse(p.str()) == p);
  }
}

TEST_CASE("polynomial ring laws and exact division (property)") {
  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    auto a = random_poly(rng, 3), b = random_poly(rng, 4), c = random_poly(rng, 2);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
    if (!b.is_zero())
      CHECK(divide_exact(a * b, b) == a);
  }
  auto c0 = Polynomial::variable(Var::c0);
  CHECK_THROWS_AS(divide_exact(c0 + Polynomial(1), c0), std::domain_error);
}

TEST_CASE("polynomial evaluation") {
  auto p = Polynomial::parse("-4*lambda+1/2*c");
  CHECK(p.evaluate({Rational(2), Rational(1), Rational(0), Rational(0)}) == Rational(-15, 2));
}

TEST_CASE("determinant and kernel") {
  Matrix<Rational> m(3, 3);
  int vals[3][3] = {{0, 2, 1}, {1, 0, 3}, {4, 5, 6}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      m(i, j) = Rational(vals[i][j]);
  // cofactor expansion along the first row
  CHECK(determinant(m) == Rational(0 * (0 * 6 - 3 * 5) - 2 * (1 * 6 - 3 * 4) + 1 * (1 * 5 - 0 * 4)));
  CHECK(kernel(m).empty());

  Matrix<Rational> s(2, 3);
  s(0, 0) = Rational(1);
  s(0, 1) = Rational(2);
  s(1, 2) = Rational(1);
  auto k = kernel(s);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == Rational(-2));
  CHECK(k[0][1] == Rational(1));
  CHECK(k[0][2].is_zero());
  CHECK(rank(s) == 2);

  Matrix<Polynomial> p(2, 2);
  p(0, 1) = Polynomial::parse("-2*c0");
  p(1, 0) = Polynomial::parse("-2*c0");
  p(1, 1) = Polynomial::parse("-2*lambda");
  CHECK(determinant(p).str() == "-4*c0^2");
}
