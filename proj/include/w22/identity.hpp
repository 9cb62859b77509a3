#ifndef W22_IDENTITY_HPP
#define W22_IDENTITY_HPP

#include "w22/pbw.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace w22 {

/// Evaluates a prefix expression over U(L) and returns its normal form.
///
/// Grammar:
///   expr  := rational | C | C1 | (L n) | (I n) | (op expr...)
///   op    := br (2 args, ab - ba) | mul (>=1) | add (>=1) | sub (2) | neg (1)
/// Rational atoms are scalar multiples of the identity.
UEQ eval_expression(std::string_view text, std::size_t max_len = kDefaultMaxWordLength);

/// Same, but without reordering: the element as written, word by word.
UEQ expand_expression(std::string_view text, std::size_t max_len = kDefaultMaxWordLength);

struct IdentityCase {
  std::string name;
  std::string expression;
  std::string expected;
  std::string anchor;
  bool expect_pass = true;
  /// For expected-fail entries: the residual expression - expected that the engine must produce.
  std::optional<std::string> expected_residual;
  std::string note;
};

struct IdentityResult {
  std::string name;
  std::string anchor;
  bool expect_pass = true;
  bool passed = false;      // residual is exactly zero
  bool as_expected = false; // outcome matches the record (incl. residual for expected-fail)
  UEQ residual;
};

/// normal_order(expression) - expected; passes iff the residual is zero.
IdentityResult verify_identity(const IdentityCase& c);

/// Reads the JSON corpus (array of records). Throws ParseError on malformed input,
/// including an `expected` field that is not already in PBW normal form.
std::vector<IdentityCase> load_corpus(const std::filesystem::path& path);
std::vector<IdentityCase> parse_corpus(std::string_view json_text);

/// Runs every case; cases are independent and evaluated in parallel, results in input order.
std::vector<IdentityResult> verify_corpus(const std::vector<IdentityCase>& cases);

} // namespace w22

#endif
