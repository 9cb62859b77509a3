#include "w22/realizations.hpp"

#include "w22/lie.hpp"

namespace w22 {

WittTerm witt_action(std::int64_t m, std::int64_t n) {
  return {Rational(n - m), add_indices(m, n)};
}

Rational intermediate_series_action(const IntermediateSeriesParams& p, std::int64_t m,
                                    std::int64_t k) {
  return p.a + Rational(k) + p.b * Rational(m);
}

WindowReport witt_module_check(std::int64_t window) {
  WindowReport rep{"witt-module", window, 0, {}};
  for (std::int64_t a = -window; a <= window; ++a)
    for (std::int64_t b = -window; b <= window; ++b)
      for (std::int64_t n = -window; n <= window; ++n) {
        // Each side is a multiple of I(a+b+n).
        auto inner_b = witt_action(b, n);
        auto outer_ab = witt_action(a, inner_b.index);
        auto inner_a = witt_action(a, n);
        auto outer_ba = witt_action(b, inner_a.index);
        auto rhs = witt_action(a + b, n);
        Rational residual = inner_b.coeff * outer_ab.coeff - inner_a.coeff * outer_ba.coeff -
                            Rational(b - a) * rhs.coeff;
        ++rep.checks;
        if (!residual.is_zero())
          rep.failures.push_back({{a, b, n}, residual});
      }
  return rep;
}

WindowReport intermediate_series_check(const IntermediateSeriesParams& p, std::int64_t window) {
  WindowReport rep{"intermediate-series(" + p.a.str() + "," + p.b.str() + ")", window, 0, {}};
  for (std::int64_t m = -window; m <= window; ++m)
    for (std::int64_t n = -window; n <= window; ++n)
      for (std::int64_t k = -window; k <= window; ++k) {
        Rational lhs = intermediate_series_action(p, n, k) * intermediate_series_action(p, m, k + n) -
                       intermediate_series_action(p, m, k) * intermediate_series_action(p, n, k + m);
        // [L_m, L_n] = (n-m) L_{m+n} + central; the centre acts by zero here.
        Rational rhs = Rational(n - m) * intermediate_series_action(p, m + n, k);
        ++rep.checks;
        if (!(lhs - rhs).is_zero())
          rep.failures.push_back({{m, n, k}, lhs - rhs});
      }
  // Relations involving I hold trivially: I and C1 both act by zero.
  return rep;
}

WindowReport a0m1_matches_witt(std::int64_t window) {
  WindowReport rep{"A(0,-1)=witt", window, 0, {}};
  const IntermediateSeriesParams p{Rational(0), Rational(-1)};
  for (std::int64_t m = -window; m <= window; ++m)
    for (std::int64_t k = -window; k <= window; ++k) {
      Rational diff = intermediate_series_action(p, m, k) - witt_action(m, k).coeff;
      ++rep.checks;
      if (!diff.is_zero())
        rep.failures.push_back({{m, k}, diff});
    }
  return rep;
}

WindowReport semidirect_check(std::int64_t window) {
  WindowReport rep{"semidirect", window, 0, {}};
  for (std::int64_t m = -window; m <= window; ++m)
    for (std::int64_t n = -window; n <= window; ++n) {
      auto br = bracket(Generator::L(m), Generator::I(n));
      br.add(Generator::C1(), -br.coeff(Generator::C1()));
      auto w = witt_action(m, n);
      br.add(Generator::I(w.index), -w.coeff);
      ++rep.checks;
      if (!br.is_zero()) {
        Rational r;
        for (const auto& [g, c] : br)
          r += c;
        rep.failures.push_back({{m, n}, r});
      }
    }
  return rep;
}

} // namespace w22
