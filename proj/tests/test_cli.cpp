#include <doctest.h>

#include <sstream>
#include <string>

#include "cli/commands.hpp"
#include "cli/config.hpp"

using namespace rll::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const RunConfig& c) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(c, out, err);
  return {code, out.str(), err.str()};
}

RunConfig make(const std::string& sub, int m, const std::string& p) {
  RunConfig c;
  c.subcommand = sub;
  c.m = m;
  c.m_spec = std::to_string(m);
  c.p = p;
  c.threads = 1;
  return c;
}

}  // namespace

TEST_CASE("enumerate") {
  auto c = make("enumerate", 3, "1/2");
  c.n = 4;
  const auto listed = run(c);
  CHECK(listed.code == kExitOk);
  CHECK(listed.out == "0010\n0011\n0100\n0101\n0110\n1001\n1010\n1011\n1100\n1101\n");
  c.n = 40;
  c.count_only = true;
  const auto counted = run(c);
  CHECK(nlohmann::json::parse(counted.out)["count"] == 331160282);
  c.n = 0;
  CHECK(run(c).code == kExitUsage);
}

TEST_CASE("measure and pullback") {
  auto c = make("measure", 3, "1/3");
  c.word = "01";
  c.k = 1;
  const auto j = nlohmann::json::parse(run(c).out);
  CHECK(j["mu"] == "2/9");
  CHECK(j["mu_closed"] == "2/9");
  CHECK(j["pullback"] == "7/27");
  CHECK(j["mode"] == "exact");

  c.word.clear();
  c.series = true;
  c.kmax = 3;
  const auto series = run(c);
  CHECK(series.code == kExitOk);
  CHECK(series.out.find("2,16/27,11/27,34/81,19/81,34/81\n") != std::string::npos);

  auto bad = make("measure", 2, "1/3");
  bad.word = "01";
  CHECK(run(bad).code == kExitUsage);
  auto bad_p = make("measure", 3, "3/2");
  bad_p.word = "01";
  CHECK(run(bad_p).code == kExitUsage);
}

TEST_CASE("decimal p switches to float with a warning") {
  auto c = make("measure", 3, "0.25");
  c.word = "0";
  const auto result = run(c);
  CHECK(result.code == kExitOk);
  CHECK_FALSE(result.err.empty());
  CHECK(nlohmann::json::parse(result.out)["mode"] == "float");
}

TEST_CASE("lambda") {
  const auto j = nlohmann::json::parse(run(make("lambda", 3, "1/3")).out);
  CHECK(j["closed_form"] == "4/9");
  CHECK(j["stationary"] == "4/9");
  CHECK(j["cesaro"].get<double>() == doctest::Approx(4.0 / 9).epsilon(1e-3));
}

TEST_CASE("dims grid") {
  auto c = make("dims", 3, "0.5");
  c.m_spec = "3:10";
  const auto result = run(c);
  REQUIRE(result.code == kExitOk);
  std::istringstream lines(result.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "m,p,q,bound,entropy,topo_dim");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 8);

  auto edge = make("dims", 3, "0.1");
  const auto out = run(edge).out;
  CHECK(out.find("3,0.1,,,") != std::string::npos);
}

TEST_CASE("sample") {
  auto c = make("sample", 3, "0.2");
  c.n = 2000;
  c.seed = 1;
  c.format = "json";
  const auto a = run(c);
  const auto b = run(c);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  c.seed.reset();
  CHECK(run(c).code == kExitUsage);
}

TEST_CASE("gamma-check") {
  auto c = make("gamma-check", 3, "1/2");
  c.periodic = "10";
  c.variant = "weak";
  CHECK(nlohmann::json::parse(run(c).out)["status"] == "exact-member");
  c.variant = "strict";
  const auto strict = nlohmann::json::parse(run(c).out);
  CHECK(strict["status"] == "exact-nonmember");
  CHECK(strict["k"] == 1);
  CHECK(strict["position"] == 0);

  auto w = make("gamma-check", 3, "1/2");
  w.word = "0110";
  w.depth = 3;
  CHECK(nlohmann::json::parse(run(w).out)["status"] == "violated");
  w.depth = 4;
  CHECK(run(w).code == kExitUsage);
  w.periodic = "10";
  w.depth = 3;
  CHECK(run(w).code == kExitUsage);
}

TEST_CASE("unknown subcommand") {
  CHECK(run(make("frobnicate", 3, "1/2")).code == kExitUsage);
}

TEST_CASE("RunConfig round-trips through JSON") {
  RunConfig c = make("sample", 5, "2/7");
  c.n = 12345;
  c.seed = 99;
  c.stream = 4;
  c.mode = "float";
  c.stride = 10;
  c.format = "csv";
  const auto j = to_json(c);
  CHECK(j["schema"] == kSchemaVersion);
  const RunConfig back = config_from_json(j);
  CHECK(to_json(back) == j);
  CHECK(back.seed == c.seed);
  CHECK(back.p == "2/7");
}
