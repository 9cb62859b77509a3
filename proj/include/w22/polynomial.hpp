#ifndef W22_POLYNOMIAL_HPP
#define W22_POLYNOMIAL_HPP

#include "w22/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace w22 {

/// Indeterminates of the symbolic highest-weight parameters.
enum class Var : std::uint8_t { lambda = 0, c = 1, c0 = 2, c1 = 3 };

inline constexpr std::size_t kNumVars = 4;
inline constexpr std::array<std::string_view, kNumVars> kVarNames{"lambda", "c", "c0", "c1"};

/// Exponent vector over (lambda, c, c0, c1).
struct Monomial {
  std::array<std::uint32_t, kNumVars> exp{};

  std::uint32_t degree() const { return exp[0] + exp[1] + exp[2] + exp[3]; }
  bool is_constant() const { return degree() == 0; }
  bool divides(const Monomial& o) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with lambda > c > c0 > c1; true when a ranks above b.
bool monomial_greater(const Monomial& a, const Monomial& b);

/// Polynomial in lambda, c, c0, c1 with rational coefficients.
/// Terms are stored in strictly descending monomial order with no zero coefficients.
class Polynomial {
public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(std::int64_t n) : Polynomial(Rational(n)) {}
  Polynomial(const Rational& r);
  static Polynomial variable(Var v);
  static Polynomial term(const Monomial& m, const Rational& coeff);

  /// Parses the canonical form produced by str(), plus any reordering of its terms/factors.
  static Polynomial parse(std::string_view s);
  /// Canonical text, e.g. "-4*lambda+1/2*c", "0".
  std::string str() const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_constant()); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::uint32_t total_degree() const;

  Rational evaluate(const std::array<Rational, kNumVars>& point) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Quotient a/b; throws std::domain_error if b does not divide a exactly.
  friend Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

private:
  static Polynomial from_sorted(std::vector<Term> terms);
  std::vector<Term> terms_;
};

} // namespace w22

#endif
