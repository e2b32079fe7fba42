#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
  int status = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const char* cli = std::getenv("UNIP_CLI");
  REQUIRE(cli != nullptr);
  const std::string command = std::string(cli) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 256> buffer;
  while (fgets(buffer.data(), buffer.size(), pipe)) result.output += buffer.data();
  const int raw = pclose(pipe);
  result.status = WEXITSTATUS(raw);
  return result;
}

}  // namespace

TEST_CASE("count subcommand") {
  const RunResult result = run_cli("count --star C --group Sp:4 --orbit 3,1,1");
  CHECK(result.status == 0);
  CHECK(result.output == "8\n");
}

TEST_CASE("non-relevant variant counts zero") {
  const RunResult one = run_cli("count --star Dstar --group SOstar:4 --orbit 2,2 --variant I");
  const RunResult two = run_cli("count --star Dstar --group SOstar:4 --orbit 2,2 --variant II");
  CHECK(one.status == 0);
  CHECK(two.status == 0);
  CHECK(one.output + two.output == "1\n0\n");
}

TEST_CASE("gf subcommand prints the canonical polynomial") {
  const RunResult result = run_cli("gf --star B --orbit 2");
  CHECK(result.status == 0);
  CHECK(result.output == "p^3 + 2 p^2 q + 2 p q^2 + q^3\n");
}

TEST_CASE("dual subcommand json") {
  const RunResult result = run_cli("dual --star C --orbit 3,1,1 --format json");
  CHECK(result.status == 0);
  CHECK(result.output == "{\"dbv\":[2,2],\"dim\":6,\"lambda\":[1.0,0.0]}\n");
}

TEST_CASE("deterministic byte-identical output") {
  const std::string args = "pbp --star C --orbit 5,3,3,3,3,1,1 --format json";
  CHECK(run_cli(args).output == run_cli(args).output);
}

TEST_CASE("error handling") {
  CHECK(run_cli("count --star C --group Sp:4 --orbit 4,2").status == 1);   // invalid orbit
  CHECK(run_cli("count --star C --group Sp:4").status == 2);               // missing flag
  CHECK(run_cli("bogus").status == 2);
}
