#ifndef W22_PBW_HPP
#define W22_PBW_HPP

#include "w22/lie.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace w22 {

/// Word in the generators; a PBW monomial when nondecreasing in the canonical order.
using Word = std::vector<Generator>;

/// Monomials compare by length first, then lexicographically.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  }
};

template <ScalarRing R>
using UEElement = LinearCombination<Word, R, WordLess>;

using UEQ = UEElement<Rational>;

inline constexpr std::size_t kDefaultMaxWordLength = 64;

/// Which adjacent inversion the rewriter resolves first.
enum class RewriteStrategy { LeftmostFirst, RightmostFirst };

bool is_sorted_word(const Word& w);

/// "L(-1)L(1)"; the empty word prints as "1".
std::string word_str(const Word& w);

/// PBW normal form of a word, rewriting g h -> h g + [g,h] whenever g > h.
/// Throws WordLengthExceeded when w is longer than max_len.
UEQ normal_order(const Word& w, RewriteStrategy strategy = RewriteStrategy::LeftmostFirst,
                 std::size_t max_len = kDefaultMaxWordLength);

/// Normal form of an arbitrary (possibly unsorted) combination of words.
UEQ normal_order(const UEQ& u, RewriteStrategy strategy = RewriteStrategy::LeftmostFirst,
                 std::size_t max_len = kDefaultMaxWordLength);

template <ScalarRing R>
UEElement<R> lift(const UEQ& u) {
  if constexpr (std::same_as<R, Rational>) {
    return u;
  } else {
    UEElement<R> out;
    for (const auto& [w, c] : u)
      out.add(w, R(c));
    return out;
  }
}

template <ScalarRing R>
UEElement<R> ue_identity() {
  return UEElement<R>(Word{});
}

template <ScalarRing R>
UEElement<R> to_ue(const LieElement<R>& a) {
  UEElement<R> out;
  for (const auto& [g, c] : a)
    out.add(Word{g}, c);
  return out;
}

/// Product in U, normal-ordered.
template <ScalarRing R>
UEElement<R> multiply(const UEElement<R>& u, const UEElement<R>& v,
                      std::size_t max_len = kDefaultMaxWordLength) {
  UEElement<R> out;
  for (const auto& [wu, cu] : u)
    for (const auto& [wv, cv] : v) {
      Word w = wu;
      w.insert(w.end(), wv.begin(), wv.end());
      R c = cu * cv;
      for (const auto& [m, q] : normal_order(w, RewriteStrategy::LeftmostFirst, max_len))
        out.add(m, R(q) * c);
    }
  return out;
}

/// Transpose anti-involution: L(n) -> L(-n), I(n) -> I(-n), C and C1 fixed, order reversed.
Word omega_word(const Word& w);

template <ScalarRing R>
UEElement<R> omega(const UEElement<R>& u) {
  UEElement<R> out;
  for (const auto& [w, c] : u)
    for (const auto& [m, q] : normal_order(omega_word(w)))
      out.add(m, R(q) * c);
  return out;
}

template <ScalarRing R>
std::string to_string(const UEElement<R>& u) {
  return u.str([](const Word& w) { return w.empty() ? std::string() : word_str(w); });
}

} // namespace w22

#endif
