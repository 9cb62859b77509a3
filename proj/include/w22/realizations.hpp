#ifndef W22_REALIZATIONS_HPP
#define W22_REALIZATIONS_HPP

#include "w22/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace w22 {

/// x_m . I(n) = (n - m) I(m + n) for the Witt algebra acting on span{I(n)}.
struct WittTerm {
  Rational coeff;
  std::int64_t index;
};

WittTerm witt_action(std::int64_t m, std::int64_t n);

/// Intermediate-series module: L_m v_k = (a + k + b m) v_{k+m}, I_m v_k = 0, C = C1 = 0.
struct IntermediateSeriesParams {
  Rational a;
  Rational b;
};

/// Coefficient of v_{k+m} in L_m v_k.
Rational intermediate_series_action(const IntermediateSeriesParams& p, std::int64_t m, std::int64_t k);

struct WindowFailure {
  std::vector<std::int64_t> indices;
  Rational residual;
};

struct WindowReport {
  std::string name;
  std::int64_t window = 0;
  std::size_t checks = 0;
  std::vector<WindowFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// x_a(x_b I(n)) - x_b(x_a I(n)) - (b-a) x_{a+b} I(n) for |a|,|b|,|n| <= window.
WindowReport witt_module_check(std::int64_t window);

/// L_m(L_n v_k) - L_n(L_m v_k) - (n-m) L_{m+n} v_k over the window, plus I acting trivially.
WindowReport intermediate_series_check(const IntermediateSeriesParams& p, std::int64_t window);

/// The (0,-1) intermediate-series table equals the Witt action table on the window.
WindowReport a0m1_matches_witt(std::int64_t window);

/// [L_m, I_n] with C1 deleted equals (n - m) I(m+n) for |m|,|n| <= window.
WindowReport semidirect_check(std::int64_t window);

} // namespace w22

#endif
