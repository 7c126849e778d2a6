#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

// Exercises the installed binary end to end: determinism of every command
// under a fixed seed, and the exit-code contract (0 success, 1 domain or
// validation error, 2 usage error).

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string command = std::string(CODP_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

const std::string kModel = std::string(CODP_FIXTURES) + "/ev.json";

}  // namespace

TEST_CASE("every command is byte-identical across two runs") {
  const std::string commands[] = {
      "validate " + kModel,
      "check-laws --instance dist --max-carrier 2 --seed 7 --trials 20",
      "check-laws --instance interval --max-carrier 2 --seed 7 --trials 20",
      "eval " + kModel + " --wiring ev_int",
      "query " + kModel + " --cell ev_dist --fun \"(v1,l1)\"",
      "decide " + kModel +
          " --cell ev_int --fun \"(v1,l1)\" --objective worst_case --cost cost",
      "decide " + kModel +
          " --cell ev_market --fun \"(v0,l1)\" --objective expected --cost cost"
          " --render-decimal",
      "fit " + kModel +
          " --family chassis_family --mode constrained --lambda 1/2"
          " --embedding power_value",
      "bayes " + kModel + " --kernel chassis_dist --prior uniform_cmod",
  };
  for (const auto& command : commands) {
    RunResult first = run(command);
    RunResult second = run(command);
    INFO(command, "\n", first.output);
    CHECK(first.exit_code == 0);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.output == second.output);
    CHECK(first.output.find("\"version\"") != std::string::npos);
  }
}

TEST_CASE("exit-code contract") {
  // 0: success paths covered above; twarr reports its expected failure as 0
  CHECK(run("check-laws --instance twarr").exit_code == 0);
  CHECK(run("check-laws --instance powerset-empty --max-carrier 2 --trials 5")
            .exit_code == 0);

  // 1: validation and domain errors
  CHECK(run("validate " + std::string(CODP_FIXTURES) + "/bad_nonmonotone.json")
            .exit_code == 1);
  CHECK(run("validate " + std::string(CODP_FIXTURES) + "/bad_dangling.json")
            .exit_code == 1);
  CHECK(run("validate /nonexistent/nowhere.json").exit_code == 1);
  CHECK(run("query " + kModel + " --cell ghost --fun \"(v0,l0)\"").exit_code == 1);
  CHECK(run("query " + kModel + " --cell ev_int --fun nope").exit_code == 1);
  CHECK(run("decide " + kModel +
            " --cell ev_int --fun \"(v0,l0)\" --objective expected --cost cost")
            .exit_code == 1);  // objective/instance mismatch

  // 2: usage errors
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("query " + kModel).exit_code == 2);  // missing required options
  CHECK(run("check-laws").exit_code == 2);
}

TEST_CASE("structured domain errors name their code") {
  RunResult result = run("query " + kModel + " --cell ghost --fun x");
  CHECK(result.output.find("UnboundName") != std::string::npos);
  RunResult bad = run("validate " + std::string(CODP_FIXTURES) +
                      "/bad_nonmonotone.json");
  CHECK(bad.output.find("NotMonotone") != std::string::npos);
  CHECK(bad.output.find("(f1, f0, r0, r0)") != std::string::npos);
}

TEST_CASE("twarr and mutant reports carry their witnesses") {
  RunResult twarr = run("check-laws --instance twarr");
  CHECK(twarr.output.find("witness pair (0,1)") != std::string::npos);
  RunResult mutant =
      run("check-laws --instance powerset-empty --max-carrier 2 --trials 5");
  CHECK(mutant.output.find("delete_natural") != std::string::npos);
  CHECK(mutant.output.find("{}") != std::string::npos);
}
