#include "w22/cli.hpp"

#include "w22/errors.hpp"
#include "w22/realizations.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <optional>
#include <sstream>

#ifndef W22_CORPUS_PATH
#define W22_CORPUS_PATH "data/paper_identities.json"
#endif

namespace w22 {

using ojson = nlohmann::ordered_json;

std::string default_corpus_path() { return W22_CORPUS_PATH; }

namespace {

template <ScalarRing R>
ojson matrix_json(const Matrix<R>& m, int level) {
  ojson j;
  j["level"] = level;
  ojson basis = ojson::array();
  for (const auto& b : level_basis_unchecked(level))
    basis.push_back(b.str());
  j["basis"] = basis;
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (std::size_t k = 0; k < m.cols(); ++k)
      row.push_back(m(i, k).str());
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

ojson vector_json(const VermaVector<Rational>& v) {
  ojson coords = ojson::array();
  for (const auto& [b, c] : v.coords)
    coords.push_back(ojson::array({b.str(), c.str()}));
  return coords;
}

ojson window_json(const WindowReport& r) {
  ojson j;
  j["name"] = r.name;
  j["window"] = r.window;
  j["checks"] = r.checks;
  j["failures"] = r.failures.size();
  return j;
}

std::string kv_csv(const ojson& j) {
  std::string out;
  for (const auto& [k, v] : j.items())
    out += k + "," + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  return out;
}

ojson witness_json(const ReducibilityWitness& w) {
  return {{"reducible", w.reducible},
          {"witness_m", w.witness_m ? ojson(*w.witness_m) : ojson(nullptr)}};
}

ojson cross_check_json(const SuiteCrossCheck& sc) {
  const auto& cc = sc.check;
  ojson j;
  j["lambda"] = cc.params.lambda.str();
  j["c"] = cc.params.c.str();
  j["c0"] = cc.params.c0.str();
  j["c1"] = cc.params.c1.str();
  j["stated_criterion"] = witness_json(cc.stated);
  j["engine_criterion"] = witness_json(cc.engine);
  ojson dets = ojson::array();
  for (const auto& d : cc.dets)
    dets.push_back(d.str());
  j["dets"] = dets;
  j["singular_counts"] = cc.singular_counts;
  j["first_degenerate_level"] = cc.first_degenerate_level;
  j["engine_agrees"] = cc.agrees_with(cc.engine);
  j["stated_agrees"] = cc.agrees_with(cc.stated);
  j["stated_expected_to_agree"] = sc.stated_expected_to_agree;
  j["as_expected"] = sc.as_expected();
  return j;
}

struct ParamStrings {
  std::optional<std::string> lambda, c, c0, c1;
};

void add_param_options(CLI::App* sub, ParamStrings& ps) {
  sub->add_option("--lambda", ps.lambda, "highest weight (exact rational)");
  sub->add_option("--c", ps.c, "central charge of C (exact rational)");
  sub->add_option("--c0", ps.c0, "I(0) eigenvalue on v (exact rational)");
  sub->add_option("--c1", ps.c1, "central charge of C1 (exact rational)");
}

Rational required(const std::optional<std::string>& s, const char* name) {
  if (!s)
    throw ParseError(std::string("missing --") + name);
  return Rational::parse(*s);
}

HWParams<Rational> numeric_params(const ParamStrings& ps) {
  return {required(ps.lambda, "lambda"), required(ps.c, "c"), required(ps.c0, "c0"),
          required(ps.c1, "c1")};
}

} // namespace

template <ScalarRing R>
std::string emit_matrix(const Matrix<R>& m, int level, OutputFormat format) {
  if (format == OutputFormat::json)
    return matrix_json(m, level).dump() + "\n";
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (k)
        out += ',';
      out += m(i, k).str();
    }
    out += '\n';
  }
  return out;
}

template std::string emit_matrix(const Matrix<Rational>&, int, OutputFormat);
template std::string emit_matrix(const Matrix<Polynomial>&, int, OutputFormat);

SuiteReport paper_suite(const std::vector<IdentityCase>& corpus) {
  SuiteReport rep;
  rep.identities = verify_corpus(corpus);
  for (const auto& r : rep.identities)
    rep.unexpected += r.as_expected ? 0 : 1;
  rep.jacobi = jacobi_report(6);
  rep.unexpected += rep.jacobi.violations.size();
  rep.semidirect = semidirect_check(8);
  rep.unexpected += rep.semidirect.failures.size();
  // With these brackets the form degenerates where (m^2-1)/12 c1 = 2 c0, so the stated
  // criterion is expected to disagree at (1, -8) and (1, 8).
  struct Sample {
    int c0, c1;
    bool stated_agrees;
  };
  const Rational two(2), one(1);
  for (auto s : {Sample{0, 5, true}, Sample{1, 1, true}, Sample{-1, 0, true}, Sample{1, -8, false},
                 Sample{1, 8, false}}) {
    SuiteCrossCheck sc{criterion_cross_check({two, one, Rational(s.c0), Rational(s.c1)}, 4),
                       s.stated_agrees};
    rep.unexpected += sc.as_expected() ? 0 : 1;
    rep.cross_checks.push_back(std::move(sc));
  }
  return rep;
}

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult res;
  std::ostringstream out, err;

  CLI::App app{"Exact computations for the W-algebra W(2,2)", "w22"};
  app.require_subcommand(1);

  std::string format_str = "json";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_str, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  int max_index = 3;
  auto* jacobi = app.add_subcommand("jacobi", "Jacobi identity and antisymmetry on an index window");
  jacobi->add_option("--max-index", max_index)->check(CLI::Range(1, 1000));
  add_format(jacobi);

  std::string corpus_path = default_corpus_path();
  auto* suite = app.add_subcommand("paper-suite", "Identity corpus and cross-validation suite");
  suite->add_option("--corpus", corpus_path, "identity corpus JSON file");
  add_format(suite);

  int level = 0;
  auto* dim = app.add_subcommand("verma-dim", "Level basis and dimension");
  dim->add_option("--level", level)->required();
  add_format(dim);

  ParamStrings ps;
  bool symbolic = false;
  auto* gram = app.add_subcommand("gram", "Contravariant form on one level");
  auto* det = app.add_subcommand("det", "Determinant of the contravariant form");
  for (auto* sub : {gram, det}) {
    sub->add_option("--level", level)->required();
    sub->add_flag("--symbolic", symbolic, "polynomial entries in lambda, c, c0, c1");
    add_param_options(sub, ps);
    add_format(sub);
  }

  auto* sing = app.add_subcommand("singular", "Singular vectors on one level");
  sing->add_option("--level", level)->required();
  add_param_options(sing, ps);
  add_format(sing);

  auto* crit = app.add_subcommand("criterion", "Reducibility criterion for (c0, c1)");
  crit->add_option("--c0", ps.c0)->required();
  crit->add_option("--c1", ps.c1)->required();
  add_format(crit);

  auto* i0 = app.add_subcommand("i0", "Matrix and Jordan structure of I(0) on one level");
  i0->add_option("--level", level)->required();
  add_param_options(i0, ps);
  add_format(i0);

  int window = 8;
  auto* real = app.add_subcommand("realization", "Witt-module, intermediate-series and semidirect checks");
  real->add_option("--window", window)->check(CLI::Range(1, 1000));
  add_format(real);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    res.exit_code = app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    res.out = out.str();
    res.err = err.str();
    return res;
  }

  const OutputFormat format = format_str == "csv" ? OutputFormat::csv : OutputFormat::json;
  auto emit = [&](const ojson& j) {
    out << (format == OutputFormat::json ? j.dump() + "\n" : kv_csv(j));
  };

  try {
    if (const char* env = std::getenv("W22_MAX_LEVEL")) {
      auto bound = Rational::parse(env);
      if (!bound.is_integer() || bound.sign() < 0 || bound > Rational(64))
        throw ParseError("W22_MAX_LEVEL must be an integer in [0, 64]");
      set_max_level(static_cast<int>(bound.numerator().get_si()));
    }

    if (*jacobi) {
      auto rep = jacobi_report(max_index);
      ojson j;
      j["max_index"] = max_index;
      j["triples_checked"] = rep.triples_checked;
      j["violations"] = rep.violations.size();
      emit(j);
      res.exit_code = rep.violations.empty() ? kExitOk : kExitViolation;
    } else if (*suite) {
      auto rep = paper_suite(load_corpus(corpus_path));
      if (format == OutputFormat::csv) {
        out << "name,anchor,expect,outcome,as_expected,residual\n";
        for (const auto& r : rep.identities)
          out << '"' << r.name << "\",\"" << r.anchor << "\"," << (r.expect_pass ? "pass" : "fail")
              << ',' << (r.passed ? "pass" : "fail") << ',' << (r.as_expected ? "true" : "false")
              << ",\"" << to_string(r.residual) << "\"\n";
      } else {
        ojson j;
        ojson cases = ojson::array();
        for (const auto& r : rep.identities) {
          ojson c;
          c["name"] = r.name;
          c["anchor"] = r.anchor;
          c["expect"] = r.expect_pass ? "pass" : "fail";
          c["outcome"] = r.passed ? "pass" : "fail";
          c["as_expected"] = r.as_expected;
          c["residual"] = to_string(r.residual);
          cases.push_back(c);
        }
        j["cases"] = cases;
        j["jacobi"] = {{"max_index", rep.jacobi.max_index},
                       {"triples_checked", rep.jacobi.triples_checked},
                       {"violations", rep.jacobi.violations.size()}};
        j["semidirect"] = window_json(rep.semidirect);
        ojson ccs = ojson::array();
        for (const auto& cc : rep.cross_checks)
          ccs.push_back(cross_check_json(cc));
        j["cross_checks"] = ccs;
        j["unexpected"] = rep.unexpected;
        out << j.dump() << "\n";
      }
      res.exit_code = rep.unexpected == 0 ? kExitOk : kExitViolation;
    } else if (*dim) {
      auto basis = level_basis(level);
      ojson j;
      j["level"] = level;
      j["dimension"] = basis.size();
      ojson names = ojson::array();
      for (const auto& b : basis)
        names.push_back(b.str());
      j["basis"] = names;
      if (format == OutputFormat::csv) {
        out << "level,dimension\n" << level << ',' << basis.size() << '\n';
      } else {
        emit(j);
      }
    } else if (*gram || *det) {
      const bool is_gram = static_cast<bool>(*gram);
      if (symbolic) {
        if (ps.lambda || ps.c || ps.c0 || ps.c1)
          throw ParseError("--symbolic excludes numeric parameters");
        auto p = HWParams<Polynomial>::symbolic();
        if (is_gram) {
          auto m = gram_matrix(level, p);
          out << emit_matrix(m, level, format);
          res.exit_code = m.is_symmetric() ? kExitOk : kExitViolation;
        } else {
          emit(ojson{{"level", level}, {"det", shapovalov_det(level, p).str()}});
        }
      } else {
        auto p = numeric_params(ps);
        if (is_gram) {
          auto m = gram_matrix(level, p);
          out << emit_matrix(m, level, format);
          res.exit_code = m.is_symmetric() ? kExitOk : kExitViolation;
        } else {
          emit(ojson{{"level", level}, {"det", shapovalov_det(level, p).str()}});
        }
      }
    } else if (*sing) {
      auto p = numeric_params(ps);
      auto vecs = singular_vectors(level, p);
      auto g = gram_matrix(level, p);
      auto basis = level_basis(level);
      bool radical = true;
      ojson list = ojson::array();
      for (const auto& s : vecs) {
        radical = radical && in_radical(g, basis, s.vector);
        list.push_back({{"coords", vector_json(s.vector)}, {"i0_eigenvector", s.i0_eigenvector}});
      }
      if (format == OutputFormat::csv) {
        out << "vector,basis,coeff\n";
        for (std::size_t i = 0; i < vecs.size(); ++i)
          for (const auto& [b, c] : vecs[i].vector.coords)
            out << i << ',' << b.str() << ',' << c.str() << '\n';
      } else {
        emit(ojson{{"level", level}, {"count", vecs.size()}, {"vectors", list}});
      }
      res.exit_code = radical ? kExitOk : kExitViolation;
    } else if (*crit) {
      auto w = is_reducible(Rational::parse(*ps.c0), Rational::parse(*ps.c1));
      emit(ojson{{"reducible", w.reducible},
                 {"witness_m", w.witness_m ? ojson(*w.witness_m) : ojson(nullptr)}});
    } else if (*i0) {
      if (!ps.c0)
        throw ParseError("missing --c0");
      HWParams<Rational> p{ps.lambda ? Rational::parse(*ps.lambda) : Rational(),
                           ps.c ? Rational::parse(*ps.c) : Rational(), Rational::parse(*ps.c0),
                           ps.c1 ? Rational::parse(*ps.c1) : Rational()};
      auto rep = i0_analysis(level, p);
      if (format == OutputFormat::csv) {
        out << emit_matrix(rep.matrix, level, format);
      } else {
        ojson j = matrix_json(rep.matrix, level);
        j["nilpotent_within_bound"] = rep.nilpotent_within_bound;
        j["nilpotency_index"] = rep.nilpotency_index;
        j["diagonalizable"] = rep.diagonalizable;
        j["jordan_blocks"] = rep.jordan_blocks;
        out << j.dump() << "\n";
      }
      res.exit_code = rep.nilpotent_within_bound ? kExitOk : kExitViolation;
    } else if (*real) {
      std::vector<WindowReport> reps{witt_module_check(window), semidirect_check(window),
                                     a0m1_matches_witt(window)};
      for (auto [a, b] : {std::pair{Rational(0), Rational(-1)}, std::pair{Rational(0), Rational(0)},
                          std::pair{Rational(1, 2), Rational(3)}, std::pair{Rational(1), Rational(2)},
                          std::pair{Rational(-2, 3), Rational(1, 5)}})
        reps.push_back(intermediate_series_check({a, b}, window));
      bool ok = true;
      if (format == OutputFormat::csv) {
        out << "name,window,checks,failures\n";
        for (const auto& r : reps)
          out << r.name << ',' << r.window << ',' << r.checks << ',' << r.failures.size() << '\n';
      }
      ojson list = ojson::array();
      for (const auto& r : reps) {
        ok = ok && r.passed();
        list.push_back(window_json(r));
      }
      if (format == OutputFormat::json)
        out << ojson{{"window", window}, {"reports", list}}.dump() << "\n";
      res.exit_code = ok ? kExitOk : kExitViolation;
    }
  } catch (const ParseError& e) {
    err << "w22: " << e.what() << "\n";
    res.exit_code = kExitUsage;
  } catch (const LevelBoundExceeded& e) {
    err << "w22: " << e.what() << "\n";
    res.exit_code = kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "w22: " << e.what() << "\n";
    res.exit_code = kExitUsage;
  }

  res.out = res.exit_code == kExitUsage ? std::string() : out.str();
  res.err = err.str();
  return res;
}

} // namespace w22
