#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_shell(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

RunResult run_cli(const std::string& args) {
  return run_shell(std::string(CHIRO_CLI_PATH) + " " + args + " 2>/dev/null");
}

}  // namespace

TEST_CASE("classify reports the zero label with sheet membership") {
  const auto r = run_cli("classify 1/2 3/8 1/4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"label\": \"zero\"") != std::string::npos);
  CHECK(r.out.find("\"sheet_s\": true") != std::string::npos);
  CHECK(r.out.find("\"sheet_t\": false") != std::string::npos);
}

TEST_CASE("decimal and fraction inputs produce identical output") {
  const auto fraction = run_cli("classify 1/2 3/8 1/4");
  const auto decimal = run_cli("classify 0.5 0.375 0.25");
  CHECK(fraction.exit_code == 0);
  CHECK(decimal.exit_code == 0);
  CHECK(fraction.out == decimal.out);
}

TEST_CASE("identities and det-table verify and exit 0") {
  CHECK(run_cli("identities").exit_code == 0);
  const auto dt = run_cli("det-table");
  CHECK(dt.exit_code == 0);
  CHECK(dt.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("chirotope csv output") {
  const auto r = run_cli("chirotope 1/2 1/2 1/3 --csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("i,j,k,sign\n", 0) == 0);
  CHECK(r.out.find("9,12,13,0\n") != std::string::npos);
}

TEST_CASE("agreement passes on a named point") {
  const auto r = run_cli("agreement 3/4 11/24 2/7");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("components finds the two-part structure") {
  const auto r = run_cli("components --target minus --resolution 16 --fast");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"count\": 2") != std::string::npos);
  CHECK(r.out.find("\"representatives\"") != std::string::npos);
  CHECK(r.out.find("\"node_count\"") != std::string::npos);
}

TEST_CASE("axioms subcommand verifies a flipped chirotope") {
  const auto r = run_cli("axioms plus");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("alt-base rejects excluded parameters with exit 2") {
  CHECK(run_cli("alt-base 1/2").exit_code == 2);
  const auto ok = run_cli("alt-base 1/4");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("\"equals_base\": true") != std::string::npos);
}

TEST_CASE("batch classification writes csv") {
  const auto r = run_shell(std::string("printf '1/4 3/4 1/8\\n1/2 1/2 1/3\\n' | ") +
                           CHIRO_CLI_PATH + " classify --batch - 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("s,t,u,label,D\n", 0) == 0);
  CHECK(r.out.find("1/4,3/4,1/8,minus,-7/256\n") != std::string::npos);
  CHECK(r.out.find("1/2,1/2,1/3,zero,0\n") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("classify 1/2 1/2").exit_code == 2);      // missing u
  CHECK(run_cli("classify 1/0 1/2 1/2").exit_code == 2);  // zero denominator
  CHECK(run_cli("classify 0.1234567890123 1/2 1/2").exit_code == 2);  // 13 digits
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("components --target nowhere --resolution 8").exit_code == 2);
  CHECK(run_cli("separation --target minus --resolution 15").exit_code == 2);  // odd slice
}

TEST_CASE("zero-sheets passes at a small resolution") {
  const auto r = run_cli("zero-sheets --m 4 --fast");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("separation certificate via the cli") {
  const auto r = run_cli("separation --target plus --resolution 8 --fast");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"symbolic_zero\": true") != std::string::npos);
  CHECK(r.out.find("\"slice_hits\": 0") != std::string::npos);
}
