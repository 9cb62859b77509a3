#include "w22/identity.hpp"

#include "w22/errors.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace w22 {

namespace {

// Free associative algebra element: words are concatenated, never reordered.
using Free = UEQ;

class ExprParser {
public:
  ExprParser(std::string_view s, std::size_t max_len) : s_(s), max_len_(max_len) {}

  Free run() {
    Free e = expr();
    skip_ws();
    if (pos_ != s_.size())
      fail("trailing input");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("bad expression '" + std::string(s_) + "' at " + std::to_string(pos_) + ": " +
                     what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  std::string_view token() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) &&
           s_[pos_] != '(' && s_[pos_] != ')')
      ++pos_;
    if (start == pos_)
      fail("expected token");
    return s_.substr(start, pos_ - start);
  }

  bool at_close() {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == ')';
  }

  Free product(const Free& a, const Free& b) const {
    Free out;
    for (const auto& [wa, ca] : a)
      for (const auto& [wb, cb] : b) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        if (w.size() > max_len_)
          throw WordLengthExceeded("expression word exceeds length bound");
        out.add(w, ca * cb);
      }
    return out;
  }

  Free expr() {
    skip_ws();
    if (pos_ >= s_.size())
      fail("unexpected end");
    if (s_[pos_] != '(') {
      auto t = token();
      if (t == "C")
        return Free(Word{Generator::C()});
      if (t == "C1")
        return Free(Word{Generator::C1()});
      return Free(Word{}, Rational::parse(t));
    }
    ++pos_;
    auto op = token();
    if (op == "L" || op == "I") {
      auto idx = Rational::parse(token());
      if (!idx.is_integer())
        fail("generator index must be an integer");
      auto n = idx.numerator();
      if (!n.fits_slong_p())
        throw IndexOverflow("generator index out of range");
      auto g = op == "L" ? Generator::L(n.get_si()) : Generator::I(n.get_si());
      close();
      return Free(Word{g});
    }
    std::vector<Free> args;
    while (!at_close())
      args.push_back(expr());
    close();
    auto want = [&](std::size_t lo, std::size_t hi) {
      if (args.size() < lo || args.size() > hi)
        fail("wrong number of arguments to '" + std::string(op) + "'");
    };
    if (op == "br") {
      want(2, 2);
      return product(args[0], args[1]) - product(args[1], args[0]);
    }
    if (op == "mul") {
      want(1, SIZE_MAX);
      Free acc = args[0];
      for (std::size_t i = 1; i < args.size(); ++i)
        acc = product(acc, args[i]);
      return acc;
    }
    if (op == "add") {
      want(1, SIZE_MAX);
      Free acc;
      for (const auto& a : args)
        acc += a;
      return acc;
    }
    if (op == "sub") {
      want(2, 2);
      return args[0] - args[1];
    }
    if (op == "neg") {
      want(1, 1);
      return -args[0];
    }
    fail("unknown operator '" + std::string(op) + "'");
  }

  void close() {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != ')')
      fail("expected ')'");
    ++pos_;
  }

  std::string_view s_;
  std::size_t max_len_;
  std::size_t pos_ = 0;
};

} // namespace

UEQ expand_expression(std::string_view text, std::size_t max_len) {
  return ExprParser(text, max_len).run();
}

UEQ eval_expression(std::string_view text, std::size_t max_len) {
  return normal_order(expand_expression(text, max_len), RewriteStrategy::LeftmostFirst, max_len);
}

IdentityResult verify_identity(const IdentityCase& c) {
  IdentityResult r;
  r.name = c.name;
  r.anchor = c.anchor;
  r.expect_pass = c.expect_pass;
  r.residual = eval_expression(c.expression) - eval_expression(c.expected);
  r.passed = r.residual.is_zero();
  if (c.expect_pass) {
    r.as_expected = r.passed;
  } else {
    r.as_expected = !r.passed;
    if (c.expected_residual)
      r.as_expected = r.as_expected && r.residual == eval_expression(*c.expected_residual);
  }
  return r;
}

std::vector<IdentityCase> parse_corpus(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("corpus is not valid JSON: ") + e.what());
  }
  if (!doc.is_array())
    throw ParseError("corpus must be a JSON array");
  std::vector<IdentityCase> cases;
  for (const auto& rec : doc) {
    try {
      IdentityCase c;
      c.name = rec.at("name").get<std::string>();
      c.expression = rec.at("expression").get<std::string>();
      c.expected = rec.at("expected").get<std::string>();
      c.anchor = rec.at("anchor").get<std::string>();
      c.expect_pass = rec.at("expect").get<std::string>() == "pass";
      if (!c.expect_pass && rec.at("expect").get<std::string>() != "fail")
        throw ParseError("expect must be \"pass\" or \"fail\"");
      if (rec.contains("residual"))
        c.expected_residual = rec["residual"].get<std::string>();
      if (rec.contains("note"))
        c.note = rec["note"].get<std::string>();
      expand_expression(c.expression);
      if (c.expected_residual)
        expand_expression(*c.expected_residual);
      for (const auto& [w, q] : expand_expression(c.expected))
        if (!is_sorted_word(w))
          throw ParseError("expected value of '" + c.name + "' is not in normal form");
      cases.push_back(std::move(c));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad corpus record: ") + e.what());
    }
  }
  return cases;
}

std::vector<IdentityCase> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open corpus " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str());
}

std::vector<IdentityResult> verify_corpus(const std::vector<IdentityCase>& cases) {
  std::vector<IdentityResult> out(cases.size());
  const auto n = static_cast<std::ptrdiff_t>(cases.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = verify_identity(cases[static_cast<std::size_t>(i)]);
  return out;
}

} // namespace w22
