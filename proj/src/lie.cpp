#include "w22/lie.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace w22 {

namespace {

// (n^3 - n)/12 when m = -n, else zero.
Rational central_term(std::int64_t n, std::int64_t m) {
  if (n != -m)
    return {};
  Rational nn(n);
  return (nn * nn * nn - nn) / Rational(12);
}

LieQ bracket_ordered(const Generator& g, const Generator& h) {
  // Only [L,L] and [L,I] are nonzero; the caller handles the other orders.
  LieQ out;
  std::int64_t n = g.index(), m = h.index();
  std::int64_t s = add_indices(n, m);
  if (h.kind() == Kind::L) {
    out.add(Generator::L(s), Rational(m - n));
    out.add(Generator::C(), central_term(n, m));
  } else {
    out.add(Generator::I(s), Rational(m - n));
    out.add(Generator::C1(), central_term(n, m));
  }
  return out;
}

} // namespace

LieQ bracket(const Generator& g, const Generator& h) {
  if (g.is_central() || h.is_central())
    return {};
  if (g.kind() == Kind::I && h.kind() == Kind::I)
    return {};
  if (g.kind() == Kind::L)
    return bracket_ordered(g, h);
  return -bracket_ordered(h, g);
}

LieQ sigma(const Generator& g) {
  switch (g.kind()) {
  case Kind::L:
    return LieQ(Generator::L(-g.index()), Rational(-1));
  case Kind::I:
    return LieQ(Generator::I(-g.index()), Rational(-1));
  case Kind::C:
    return LieQ(Generator::C(), Rational(-1));
  case Kind::C1:
    return LieQ(Generator::C1(), Rational(-1));
  }
  return {};
}

std::vector<Generator> generator_window(std::int64_t max_index) {
  std::vector<Generator> gens;
  for (std::int64_t n = -max_index; n <= max_index; ++n)
    gens.push_back(Generator::L(n));
  for (std::int64_t n = -max_index; n <= max_index; ++n)
    gens.push_back(Generator::I(n));
  gens.push_back(Generator::C());
  gens.push_back(Generator::C1());
  return gens;
}

LieQ jacobi_sum(const Generator& a, const Generator& b, const Generator& c) {
  LieQ A(a), B(b), C(c);
  return bracket(A, bracket(B, C)) + bracket(B, bracket(C, A)) + bracket(C, bracket(A, B));
}

JacobiReport jacobi_report_serial(std::int64_t max_index) {
  auto gens = generator_window(max_index);
  JacobiReport rep;
  rep.max_index = max_index;
  for (const auto& a : gens)
    for (const auto& b : gens)
      for (const auto& c : gens) {
        auto s = jacobi_sum(a, b, c);
        ++rep.triples_checked;
        if (!s.is_zero())
          rep.violations.push_back({{a, b, c}, std::move(s)});
      }
  return rep;
}

JacobiReport jacobi_report(std::int64_t max_index) {
  const auto gens = generator_window(max_index);
  const auto n = static_cast<std::int64_t>(gens.size());
  const std::int64_t total = n * n * n;
  std::vector<std::vector<std::pair<std::int64_t, LieQ>>> found;

#pragma omp parallel
  {
#pragma omp single
    {
#ifdef _OPENMP
      found.resize(static_cast<std::size_t>(omp_get_num_threads()));
#else
      found.resize(1);
#endif
    }
#ifdef _OPENMP
    auto& local = found[static_cast<std::size_t>(omp_get_thread_num())];
#else
    auto& local = found[0];
#endif
#pragma omp for schedule(static)
    for (std::int64_t t = 0; t < total; ++t) {
      const auto& a = gens[static_cast<std::size_t>(t / (n * n))];
      const auto& b = gens[static_cast<std::size_t>((t / n) % n)];
      const auto& c = gens[static_cast<std::size_t>(t % n)];
      auto s = jacobi_sum(a, b, c);
      if (!s.is_zero())
        local.emplace_back(t, std::move(s));
    }
  }

  std::vector<std::pair<std::int64_t, LieQ>> all;
  for (auto& f : found)
    for (auto& e : f)
      all.push_back(std::move(e));
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  JacobiReport rep;
  rep.max_index = max_index;
  rep.triples_checked = static_cast<std::size_t>(total);
  for (auto& [t, s] : all)
    rep.violations.push_back({{gens[static_cast<std::size_t>(t / (n * n))],
                               gens[static_cast<std::size_t>((t / n) % n)],
                               gens[static_cast<std::size_t>(t % n)]},
                              std::move(s)});
  return rep;
}

std::set<Generator> positive_closure(std::int64_t max_weight) {
  std::set<Generator> reached{Generator::L(1), Generator::L(2), Generator::I(1), Generator::I(2)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Generator> cur(reached.begin(), reached.end());
    for (const auto& a : cur)
      for (const auto& b : cur) {
        if (a.weight() + b.weight() > max_weight)
          continue;
        auto br = bracket(a, b);
        if (br.size() == 1 && reached.insert(br.begin()->first).second)
          grew = true;
      }
  }
  return reached;
}

} // namespace w22
