#include "w22/realizations.hpp"

#include <doctest.h>

using namespace w22;

TEST_CASE("Witt action on span{I(n)}") {
  auto t = witt_action(2, 5);
  CHECK(t.coeff == Rational(3));
  CHECK(t.index == 7);
  for (int m = -5; m <= 5; ++m)
    CHECK(witt_action(m, m).coeff.is_zero());
  CHECK(witt_action(-3, 3).index == 0);
  CHECK(witt_action(-3, 3).coeff == Rational(6));

  // x_a(x_b I(n)) - x_b(x_a I(n)) = (b - a) x_{a+b} I(n), checked by hand for one triple
  const int a = 1, b = -3, n = 4;
  auto ab = witt_action(b, n), ab2 = witt_action(a, ab.index);
  auto ba = witt_action(a, n), ba2 = witt_action(b, ba.index);
  auto s = witt_action(a + b, n);
  CHECK(ab2.index == s.index);
  CHECK(ab.coeff * ab2.coeff - ba.coeff * ba2.coeff == Rational(b - a) * s.coeff);

  auto rep = witt_module_check(6);
  CHECK(rep.passed());
  CHECK(rep.checks > 0);
}

TEST_CASE("intermediate series") {
  const IntermediateSeriesParams p{Rational(1, 2), Rational(3)};
  CHECK(intermediate_series_action(p, 2, 1) == Rational(15, 2));
  CHECK(intermediate_series_action({0, -1}, 3, 4) == Rational(1));
  CHECK(intermediate_series_action({0, 0}, 0, -4) == Rational(-4));

  for (auto q : {IntermediateSeriesParams{0, -1}, IntermediateSeriesParams{0, 0}, p,
                 IntermediateSeriesParams{Rational(-2, 3), Rational(1, 5)}}) {
    auto rep = intermediate_series_check(q, 6);
    CHECK(rep.passed());
    CHECK(rep.checks > 0);
  }
  CHECK(a0m1_matches_witt(8).passed());
}

TEST_CASE("semidirect structure") {
  auto rep = semidirect_check(8);
  CHECK(rep.passed());
  CHECK(rep.window == 8);
  // pairs (m, -m) and (0, n) are part of the window
  CHECK(rep.checks >= 17u * 17u);
}
