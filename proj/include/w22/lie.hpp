#ifndef W22_LIE_HPP
#define W22_LIE_HPP

#include "w22/generator.hpp"
#include "w22/linear.hpp"

#include <array>
#include <set>
#include <string>
#include <vector>

namespace w22 {

/// Element of W(2,2): finite combination of generators in canonical order.
template <ScalarRing R>
using LieElement = LinearCombination<Generator, R>;

using LieQ = LieElement<Rational>;

/// Structure constants: [g, h] for two basis generators.
///   [L(n), L(m)] = (m-n) L(n+m) + delta_{n,-m} (n^3-n)/12 C
///   [L(n), I(m)] = (m-n) I(n+m) + delta_{n,-m} (n^3-n)/12 C1
///   [I(n), I(m)] = 0,  C and C1 central.
LieQ bracket(const Generator& g, const Generator& h);

/// Bilinear extension of the generator bracket.
template <ScalarRing R>
LieElement<R> bracket(const LieElement<R>& a, const LieElement<R>& b) {
  LieElement<R> out;
  for (const auto& [ga, ca] : a)
    for (const auto& [gb, cb] : b) {
      R cab = ca * cb;
      for (const auto& [g, q] : bracket(ga, gb))
        out.add(g, R(q) * cab);
    }
  return out;
}

/// Canonical involution L(n) -> -L(-n), I(n) -> -I(-n), C -> -C, C1 -> -C1.
LieQ sigma(const Generator& g);

template <ScalarRing R>
LieElement<R> sigma(const LieElement<R>& a) {
  LieElement<R> out;
  for (const auto& [g, c] : a)
    for (const auto& [h, q] : sigma(g))
      out.add(h, R(q) * c);
  return out;
}

inline std::int64_t weight(const Generator& g) { return g.weight(); }

template <ScalarRing R>
std::string to_string(const LieElement<R>& a) {
  return a.str([](const Generator& g) { return g.str(); });
}

/// L(n), I(n) for |n| <= max_index, then C, C1.
std::vector<Generator> generator_window(std::int64_t max_index);

struct JacobiViolation {
  std::array<Generator, 3> triple;
  LieQ cyclic_sum;
};

struct JacobiReport {
  std::int64_t max_index = 0;
  std::size_t triples_checked = 0;
  std::vector<JacobiViolation> violations;
};

/// [a,[b,c]] + [b,[c,a]] + [c,[a,b]].
LieQ jacobi_sum(const Generator& a, const Generator& b, const Generator& c);

/// All ordered triples from generator_window(max_index); OpenMP-parallel.
JacobiReport jacobi_report(std::int64_t max_index);
/// Single-threaded reference for jacobi_report.
JacobiReport jacobi_report_serial(std::int64_t max_index);

/// Generators of positive weight up to max_weight reachable by iterated brackets of
/// L(1), L(2), I(1), I(2) (each bracket result must be a multiple of a single generator).
std::set<Generator> positive_closure(std::int64_t max_weight);

} // namespace w22

#endif
