#ifndef W22_CLI_HPP
#define W22_CLI_HPP

#include "w22/identity.hpp"
#include "w22/realizations.hpp"
#include "w22/verma.hpp"

#include <string>
#include <vector>

namespace w22 {

enum class OutputFormat { json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

struct CliResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Runs one batch command. args excludes the program name.
/// Output is byte-for-byte deterministic for a given argument list and environment.
CliResult run_cli(const std::vector<std::string>& args);

/// CSV: one row per line, exact entry strings.
/// JSON: {"level":n,"basis":[...],"entries":[[...]]}.
template <ScalarRing R>
std::string emit_matrix(const Matrix<R>& m, int level, OutputFormat format);

/// Default corpus location baked in at build time.
std::string default_corpus_path();

struct SuiteCrossCheck {
  CriterionCrossCheck check;
  bool stated_expected_to_agree = true;

  /// The engine witness always matches; the stated one matches exactly when expected to.
  bool as_expected() const {
    return check.agrees_with(check.engine) &&
           check.agrees_with(check.stated) == stated_expected_to_agree;
  }
};

struct SuiteReport {
  std::vector<IdentityResult> identities;
  JacobiReport jacobi;
  WindowReport semidirect;
  std::vector<SuiteCrossCheck> cross_checks;
  std::size_t unexpected = 0;
};

/// Identity corpus, Jacobi on |index| <= 6, semidirect window 8, criterion cross-validation.
SuiteReport paper_suite(const std::vector<IdentityCase>& corpus);

} // namespace w22

#endif
