#include "w22/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>

using namespace w22;

namespace {

CliResult run(std::vector<std::string> args) { return run_cli(args); }

std::string run_binary(const std::string& args) {
  std::string cmd = std::string(W22_CLI_PATH) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = std::fread(buf.data(), 1, buf.size(), pipe.get()))
    out.append(buf.data(), n);
  return out;
}

} // namespace

TEST_CASE("basic commands") {
  auto r = run({"gram", "--level", "0", "--lambda", "1", "--c", "0", "--c0", "1", "--c1", "0"});
  CHECK(r.exit_code == kExitOk);
  CHECK(r.out == "{\"level\":0,\"basis\":[\"1\"],\"entries\":[[\"1\"]]}\n");

  r = run({"det", "--level", "1", "--symbolic"});
  CHECK(r.out == "{\"level\":1,\"det\":\"-4*c0^2\"}\n");

  r = run({"gram", "--level", "1", "--symbolic", "--format", "csv"});
  CHECK(r.out == "0,-2*c0\n-2*c0,-2*lambda\n");

  r = run({"criterion", "--c0", "0", "--c1", "5"});
  CHECK(r.out == "{\"reducible\":true,\"witness_m\":1}\n");
  r = run({"criterion", "--c0", "1", "--c1", "1"});
  CHECK(r.out == "{\"reducible\":false,\"witness_m\":null}\n");

  r = run({"verma-dim", "--level", "6"});
  CHECK(nlohmann::json::parse(r.out)["dimension"] == 65);

  r = run({"jacobi", "--max-index", "2"});
  CHECK(r.exit_code == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["violations"] == 0);

  r = run({"i0", "--level", "1", "--c0", "3"});
  CHECK(r.exit_code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["jordan_blocks"] == nlohmann::json::array({2}));

  r = run({"singular", "--level", "1", "--lambda", "2", "--c", "1", "--c0", "0", "--c1", "1"});
  CHECK(r.exit_code == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["count"] == 1);

  r = run({"realization", "--window", "4"});
  CHECK(r.exit_code == kExitOk);
}

TEST_CASE("usage errors exit with 2") {
  const std::vector<std::vector<std::string>> bad{
      {"gram", "--level", "1", "--lambda", "1.5", "--c", "0", "--c0", "1", "--c1", "0"},
      {"gram", "--level", "1", "--lambda", "1/0", "--c", "0", "--c0", "1", "--c1", "0"},
      {"gram", "--level", "99", "--lambda", "1", "--c", "0", "--c0", "1", "--c1", "0"},
      {"det", "--level", "5", "--symbolic"},
      {"singular", "--level", "1", "--symbolic", "--lambda", "1", "--c", "0", "--c0", "1", "--c1", "0"},
      {"gram", "--level", "1", "--lambda", "1", "--c", "0", "--c0", "1"},
      {"gram", "--level", "1", "--symbolic", "--c0", "1"},
      {"gram", "--level", "1", "--symbolic", "--format", "xml"},
      {"nonsense"},
      {},
      {"i0", "--level", "1"},
  };
  for (const auto& args : bad) {
    auto r = run(args);
    CAPTURE(args.size());
    CHECK(r.exit_code == kExitUsage);
    CHECK(r.out.empty());
  }
}

TEST_CASE("violations exit with 1") {
  auto path = std::filesystem::temp_directory_path() / "w22_bad_corpus.json";
  {
    std::ofstream f(path);
    f << R"js([{"name":"wrong","expression":"(br (L 1) (I 2))","expected":"(I 4)","anchor":"","expect":"pass"}])js";
  }
  auto r = run({"paper-suite", "--corpus", path.string()});
  CHECK(r.exit_code == kExitViolation);
  CHECK(nlohmann::json::parse(r.out)["unexpected"] == 1);
  std::filesystem::remove(path);
}

TEST_CASE("emitted scalars parse back") {
  auto r = run({"gram", "--level", "2", "--symbolic"});
  auto j = nlohmann::json::parse(r.out);
  for (const auto& row : j["entries"])
    for (const auto& e : row) {
      auto s = e.get<std::string>();
      CHECK(Polynomial::parse(s).str() == s);
    }
  r = run({"gram", "--level", "3", "--lambda", "-7/3", "--c", "1/2", "--c0", "5", "--c1", "-2"});
  for (const auto& row : nlohmann::json::parse(r.out)["entries"])
    for (const auto& e : row) {
      auto s = e.get<std::string>();
      CHECK(Rational::parse(s).str() == s);
    }
}

TEST_CASE("level bound from the environment") {
  ::setenv("W22_MAX_LEVEL", "2", 1);
  auto r = run({"verma-dim", "--level", "3"});
  CHECK(r.exit_code == kExitUsage);
  ::setenv("W22_MAX_LEVEL", "x", 1);
  CHECK(run({"verma-dim", "--level", "1"}).exit_code == kExitUsage);
  ::unsetenv("W22_MAX_LEVEL");
  set_max_level(kDefaultMaxLevel);
  CHECK(run({"verma-dim", "--level", "3"}).exit_code == kExitOk);
}

TEST_CASE("binary output is deterministic") {
  for (const std::string args : {"paper-suite", "det --level 3 --symbolic",
                                 "gram --level 4 --lambda 1/2 --c 3 --c0 -1 --c1 2 --format csv",
                                 "singular --level 2 --lambda 2 --c 1 --c0 1 --c1 8"}) {
    auto a = run_binary(args), b = run_binary(args);
    CHECK_FALSE(a.empty());
    CHECK(a == b);
  }
}
