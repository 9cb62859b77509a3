#include "w22/errors.hpp"
#include "w22/identity.hpp"

#include <doctest.h>

#include <string>

using namespace w22;

namespace {

IdentityCase make(std::string expr, std::string expected, bool pass = true) {
  IdentityCase c;
  c.name = expr;
  c.expression = std::move(expr);
  c.expected = std::move(expected);
  c.expect_pass = pass;
  return c;
}

} // namespace

TEST_CASE("expression evaluation") {
  CHECK(to_string(eval_expression("(br (L 2) (L -2))")) == "1/2*C-4*L(0)");
  CHECK(eval_expression("(mul 6 (I 2))") == UEQ(Word{Generator::I(2)}, Rational(6)));
  CHECK(eval_expression("(sub (I 1) (I 1))").is_zero());
  CHECK(eval_expression("(neg C1)") == UEQ(Word{Generator::C1()}, Rational(-1)));
  CHECK(eval_expression("(add 1/2 -1/2)").is_zero());
  // expand keeps the written order
  auto raw = expand_expression("(mul (L 1) (L -1))");
  CHECK(raw == UEQ(Word{Generator::L(1), Generator::L(-1)}));
  for (const char* bad : {"(br (L 1))", "(L 1.5)", "(foo 1)", "(L 1", "L", "(mul)", "(I x)", "(L 1) (L 2)"})
    CHECK_THROWS_AS(eval_expression(bad), ParseError);
}

TEST_CASE("verify_identity examples") {
  auto r1 = verify_identity(make("(br (L -2) (I 4))", "(mul 6 (I 2))"));
  CHECK(r1.passed);
  CHECK(r1.as_expected);

  auto r2 = verify_identity(make("(br (L 1) (I 5))", "(mul 4 (I 6))"));
  CHECK(r2.passed);

  auto bad = make("(br (I -1) (I 6))", "(mul 7 (I 5))", false);
  bad.expected_residual = "(mul -7 (I 5))";
  auto r3 = verify_identity(bad);
  CHECK_FALSE(r3.passed);
  CHECK(r3.as_expected);
  CHECK(to_string(r3.residual) == "-7*I(5)");

  // an expected-fail record with the wrong recorded residual is itself unexpected
  bad.expected_residual = "(mul 7 (I 5))";
  CHECK_FALSE(verify_identity(bad).as_expected);
}

TEST_CASE("corpus records") {
  const char* json = R"js([
    {"name": "a", "expression": "(br (L 1) (I 2))", "expected": "(I 3)", "anchor": "x", "expect": "pass"},
    {"name": "b", "expression": "(br (L 1) (L -1))", "expected": "(mul -1/2 (L 0))", "anchor": "y",
     "expect": "fail", "residual": "(mul -3/2 (L 0))"}
  ])js";
  auto cases = parse_corpus(json);
  REQUIRE(cases.size() == 2);
  CHECK(cases[1].expected_residual.has_value());
  auto res = verify_corpus(cases);
  CHECK(res[0].passed);
  CHECK(res[1].as_expected);

  // expected value must already be in normal form
  const std::string unsorted = R"js([{"name":"n","expression":"(I 3)","expected":"(mul (L 1) (I 2))","anchor":"","expect":"pass"}])js";
  const std::string bad_expect = R"js([{"name":"n","expression":"(I 3)","expected":"(I 3)","anchor":"","expect":"maybe"}])js";
  const std::string not_array = R"js({"name":"n"})js";
  CHECK_THROWS_AS(parse_corpus(unsorted), ParseError);
  CHECK_THROWS_AS(parse_corpus(not_array), ParseError);
  CHECK_THROWS_AS(parse_corpus(bad_expect), ParseError);
  CHECK_THROWS_AS(parse_corpus("[1,"), ParseError);
}

TEST_CASE("shipped corpus") {
  auto cases = load_corpus(std::string(W22_TEST_DATA_DIR) + "/paper_identities.json");
  CHECK(cases.size() >= 8);
  std::size_t expected_fail = 0;
  for (const auto& r : verify_corpus(cases)) {
    CAPTURE(r.name);
    CHECK(r.as_expected);
    if (!r.expect_pass)
      ++expected_fail;
  }
  CHECK(expected_fail == 2);
}
