#ifndef W22_SCALAR_HPP
#define W22_SCALAR_HPP

#include "w22/polynomial.hpp"
#include "w22/rational.hpp"

#include <concepts>
#include <string>

namespace w22 {

/// Exact commutative coefficient ring. Instantiated by Rational and Polynomial.
template <class R>
concept ScalarRing = std::regular<R> && requires(const R& a, const R& b, const Rational& q) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
  { divide_exact(a, b) } -> std::convertible_to<R>;
  R(q);
};

/// Parses the exact text form of a scalar.
template <ScalarRing R>
R parse_scalar(std::string_view s) {
  if constexpr (std::same_as<R, Rational>)
    return Rational::parse(s);
  else
    return Polynomial::parse(s);
}

} // namespace w22

#endif
