#include <doctest.h>

#include <nlohmann/json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(CUTOFFLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("cli describe") {
  Run r = run("describe --family USp --n 3");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["space"]["beta"] == 4);
  CHECK(j["space"]["alpha_cutoff"] == 2);
  CHECK(j["space"]["c_lower"] == "5");
  CHECK(j["space"]["C_upper"] == "3");
}

TEST_CASE("cli tv-bound") {
  Run r = run("tv-bound --family SO --n 11 --eps 1");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["value"].get<double>() <= 6 / std::sqrt(11.0));
}

TEST_CASE("cli exit codes") {
  CHECK(run("describe --family Nope --n 3").code == 2);
  CHECK(run("describe --family SO").code == 2);
  CHECK(run("tv-bound --family SO --n 11").code == 2);
  CHECK(run("series --family SO --n 11 --t 1 --format csv").code == 2);
  CHECK(run("estimate --family GrR --n 5 --q 2 --t 1 --statistic trace --paths 5").code == 2);
  CHECK(run("no-such-verb").code == 2);
  CHECK(run("moment --algebra su --n 60 --pattern 'g(1,1)^4' --t 1").code == 1);
}

TEST_CASE("cli outputs are reproducible") {
  const std::string args = "estimate --family SU --n 3 --t 0.5 --paths 40 --seed 3 --threads 1";
  Run a = run(args);
  Run b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("series --family SU --n 4 --eps 0.5").out == run("series --family SU --n 4 --eps 0.5").out);
}

TEST_CASE("cli profile CSV") {
  Run r = run("profile --family SU --n 8 --format csv");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,lower,upper");
  double prev = 2;
  int rows = 0;
  while (std::getline(in, line)) {
    double t, lower, upper;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &t, &lower, &upper) == 3);
    CHECK(upper <= prev);
    prev = upper;
    ++rows;
  }
  CHECK(rows == 41);
}
