#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "coisocap/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "coisocap");
  std::ostringstream out, err;
  const int code = coisocap::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(std::move(args));
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("kfun text output") {
  CHECK(run({"kfun", "K", "16"}).out == "K(16) = 4, witness [(4,4)]\n");
  CHECK(run({"kfun", "keq", "5", "9"}).out == "keq(5,9) = 1, witness [(1,5)]\n");
  CHECK(run({"kfun", "kk", "2", "5"}).out == "kk(2,5) = 1, witness [(1,2)]\n");
  const auto inf = run({"kfun", "keq", "3", "2"});
  CHECK(inf.code == 0);
  CHECK(inf.out.find("inf") != std::string::npos);
}

TEST_CASE("kfun json output") {
  const auto j = json_of({"kfun", "kk", "4", "9/2"});
  CHECK(j["value"] == 2);
  CHECK(j["witness"] == nlohmann::json::parse("[[2,2]]"));
  for (const char* key : {"query", "value", "witness", "provenance", "notes"}) CHECK(j.contains(key));
  const auto infeasible = json_of({"kfun", "keq", "3", "2"});
  CHECK(infeasible["value"] == "inf");
  CHECK(infeasible["witness"].is_null());
}

TEST_CASE("bound json schema") {
  const auto j = json_of({"bound", "squeeze", "9", "9"});
  CHECK(j["interval"]["lower"] == nlohmann::json({{"num", 1}, {"den", 3}, {"unit", "pi"}}));
  CHECK(j["interval"]["upper"] == nlohmann::json({{"num", 1}, {"den", 1}, {"unit", "pi"}}));
  CHECK(j["witness"] == nlohmann::json::parse("[[3,3]]"));
  REQUIRE(j["provenance"]["lower"].is_array());
  for (const auto& c : j["provenance"]["lower"]) {
    CHECK(c["id"].is_string());
    CHECK(c["statement"].is_string());
  }

  const auto e = json_of({"bound", "energy", "S(2;pi) x V(2,3;pi)"});
  CHECK(e["interval"]["upper"] == "inf");
  CHECK(e["witness"].is_null());
  CHECK_FALSE(e["notes"].empty());
}

TEST_CASE("table formats") {
  const auto csv = run({"table", "K", "1", "5", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("n,value,witness\n", 0) == 0);
  CHECK(csv.out.find("\n4,2,") != std::string::npos);
  const auto j = json_of({"table", "K", "1", "20"});
  REQUIRE(j["value"].size() == 20);
  const int expected[] = {1, 2, 3, 2, 3, 4, 5, 4, 3, 4, 5, 6, 5, 6, 7, 4, 5, 6, 7, 6};
  for (int i = 0; i < 20; ++i) CHECK(j["value"][i]["value"] == expected[i]);
}

TEST_CASE("exit codes") {
  CHECK(run({"kfun", "K", "5"}).code == 0);
  CHECK(run({"kfun", "K", "0"}).code == 1);
  CHECK(run({"bound", "capacity", "3", "2"}).code == 1);
  CHECK(run({"bound", "width", "0"}).code == 1);
  CHECK(run({"kfun", "K", "abc"}).code == 2);
  CHECK(run({"kfun", "kk", "4", "9/"}).code == 2);
  CHECK(run({"bound", "energy", "S(2;pi"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "all", "--nmax", "0"}).code == 2);
  CHECK(run({"verify", "kfun-props", "--nmax", "6"}).code == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("naive oracle cap from the environment") {
  ::setenv("COISOCAP_ORACLE_CAP", "3", 1);
  const auto capped = run({"verify", "oracle", "--nmax", "6"});
  ::unsetenv("COISOCAP_ORACLE_CAP");
  const auto uncapped = run({"verify", "oracle", "--nmax", "6"});
  CHECK(capped.code == 0);
  CHECK(uncapped.code == 0);
  CHECK(capped.out != uncapped.out);
}

TEST_CASE("verify output is deterministic") {
  const auto a = run({"verify", "all", "--nmax", "8", "--format", "json"});
  const auto b = run({"verify", "all", "--nmax", "8", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["value"]["ok"] == true);
  CHECK(j["value"]["checks"].size() > 20);
  CHECK(a.err.find("wall_time_ms") != std::string::npos);
}
