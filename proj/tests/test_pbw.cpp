#include "w22/errors.hpp"
#include "w22/pbw.hpp"

#include <doctest.h>

#include <random>

using namespace w22;

namespace {

Word random_word(std::mt19937& rng, std::size_t max_len, int max_index) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> kind(0, 9), idx(-max_index, max_index);
  Word w(len(rng), Generator::C());
  for (auto& g : w) {
    int k = kind(rng);
    if (k == 0)
      g = Generator::C();
    else if (k == 1)
      g = Generator::C1();
    else if (k < 6)
      g = Generator::L(idx(rng));
    else
      g = Generator::I(idx(rng));
  }
  return w;
}

UEQ random_element(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(1, 3), coef(-3, 3);
  UEQ u;
  for (int t = terms(rng); t > 0; --t)
    u.add(random_word(rng, 2, 3), Rational(coef(rng)));
  return u;
}

Word W(std::initializer_list<Generator> gs) { return Word(gs); }

} // namespace

TEST_CASE("normal_order examples") {
  auto L = [](int n) { return Generator::L(n); };
  auto I = [](int n) { return Generator::I(n); };
  UEQ e1;
  e1.add(W({L(-1), L(1)}), Rational(1));
  e1.add(W({L(0)}), Rational(-2));
  CHECK(normal_order(W({L(1), L(-1)})) == e1);

  CHECK(normal_order(W({I(2), I(-7)})) == UEQ(W({I(-7), I(2)})));

  UEQ e3;
  e3.add(W({I(2), L(1)}), Rational(1));
  e3.add(W({I(3)}), Rational(1));
  CHECK(normal_order(W({L(1), I(2)})) == e3);
  CHECK(to_string(e3) == "I(3)+I(2)L(1)");
}

TEST_CASE("normal_order respects the word length bound") {
  Word w(kDefaultMaxWordLength + 1, Generator::L(1));
  CHECK_THROWS_AS(normal_order(w), WordLengthExceeded);
  CHECK_THROWS_AS(normal_order(W({Generator::L(1), Generator::L(0), Generator::L(-1)}),
                               RewriteStrategy::LeftmostFirst, 2),
                  WordLengthExceeded);
}

TEST_CASE("confluence: both rewrite strategies agree (property)") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 300; ++t) {
    auto w = random_word(rng, 5, 4);
    auto left = normal_order(w, RewriteStrategy::LeftmostFirst);
    auto right = normal_order(w, RewriteStrategy::RightmostFirst);
    CHECK(left == right);
    for (const auto& [m, c] : left) {
      CHECK(is_sorted_word(m));
      CHECK(m.size() <= w.size());
    }
  }
}

TEST_CASE("PBW soundness: gh - hg is the bracket") {
  const auto gens = generator_window(4);
  for (const auto& g : gens)
    for (const auto& h : gens)
      CHECK(normal_order(W({g, h})) - normal_order(W({h, g})) == to_ue(bracket(LieQ(g), LieQ(h))));
}

TEST_CASE("multiply") {
  std::mt19937 rng(5);
  const auto one = ue_identity<Rational>();
  for (int t = 0; t < 30; ++t) {
    auto u = normal_order(random_element(rng));
    CHECK(multiply(one, u) == u);
    CHECK(multiply(u, one) == u);
    auto v = normal_order(random_element(rng)), w = normal_order(random_element(rng));
    CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));

    UEQ cu;
    for (const auto& [m, c] : u) {
      Word x{Generator::C()};
      x.insert(x.end(), m.begin(), m.end());
      cu.add(x, c);
    }
    CHECK(multiply(UEQ(W({Generator::C()})), u) == cu);
    CHECK(multiply(u, UEQ(W({Generator::C()}))) == cu);
  }
  UEQ lm1(W({Generator::L(-1)})), l1(W({Generator::L(1)}));
  CHECK(multiply(lm1, l1) - multiply(l1, lm1) == UEQ(W({Generator::L(0)}), Rational(2)));
}

TEST_CASE("omega") {
  CHECK(omega(UEQ(W({Generator::L(-2)}))) == UEQ(W({Generator::L(2)})));
  CHECK(omega(UEQ(W({Generator::L(-1), Generator::I(-1)}))) ==
        UEQ(W({Generator::I(1), Generator::L(1)})));
  CHECK(omega(UEQ(W({Generator::C1()}))) == UEQ(W({Generator::C1()})));

  std::mt19937 rng(9);
  for (int t = 0; t < 40; ++t) {
    auto u = normal_order(random_element(rng));
    auto v = normal_order(random_element(rng));
    CHECK(omega(omega(u)) == u);
    CHECK(omega(multiply(u, v)) == multiply(omega(v), omega(u)));
  }
}

TEST_CASE("lifting to the polynomial ring keeps coefficients") {
  auto u = normal_order(W({Generator::L(2), Generator::L(-2)}));
  auto p = lift<Polynomial>(u);
  CHECK(p.size() == u.size());
  CHECK(to_string(p) == "1/2*C-4*L(0)+L(-2)L(2)");
}
