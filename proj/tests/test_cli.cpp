#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cnchar/commands.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cnchar");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cnchar::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify-energy") {
  auto r = run({"verify-energy", "--n", "3"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["pairs_checked"] == 484);
  CHECK(j["mismatches"] == 0);
}

TEST_CASE("char prints a sorted coefficient array") {
  auto r = run({"char", "--n", "2", "--i", "0", "--model", "rho", "--N", "5", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j[0]["q"] == 0);
  CHECK(j[0]["colour"] == std::vector<int>{0, 0});
  CHECK(std::stol(j[0]["coeff"].get<std::string>()) >= 1);
  for (std::size_t k = 1; k < j.size(); ++k) {
    auto prev = std::pair{j[k - 1]["q"].get<int>(), j[k - 1]["colour"].get<std::vector<int>>()};
    auto cur = std::pair{j[k]["q"].get<int>(), j[k]["colour"].get<std::vector<int>>()};
    CHECK(prev < cur);
  }
  auto text = run({"char", "--n", "2", "--i", "1", "--model", "frobenius", "--N", "3", "--format", "text"});
  CHECK(text.code == 0);
  CHECK(text.out.rfind("q^0 ", 0) == 0);
  CHECK(text.out.find("q^0 [0,0] 1\n") != std::string::npos);
}

TEST_CASE("every model prints the same series") {
  const auto base = run({"char", "--n", "2", "--i", "2", "--model", "rho", "--N", "6"}).out;
  for (std::string model : {"exact", "frobenius", "paths"})
    CHECK(run({"char", "--n", "2", "--i", "2", "--model", model, "--N", "6"}).out == base);
  CHECK(run({"char", "--n", "2", "--i", "2", "--model", "atleast", "--N", "6"}).out != base);
}

TEST_CASE("verify-models") {
  auto r = run({"verify-models", "--n", "2", "--N", "10"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["grounds"].size() == 3);
}

TEST_CASE("usage errors exit with two") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"verify-energy"}).code == 2);
  CHECK(run({"verify-energy", "--n", "1"}).code == 2);
  CHECK(run({"char", "--n", "2", "--i", "3", "--N", "4"}).code == 2);
  CHECK(run({"char", "--n", "2", "--i", "0", "--N", "4", "--model", "nope"}).code == 2);
  CHECK(run({"cmpp-check", "--n", "2", "--k", "1,0", "--N", "4"}).code == 2);
  CHECK(run({"cmpp-check", "--n", "2", "--k", "1,-1,0", "--N", "4"}).code == 2);
  CHECK(run({"paths", "--m", "4", "--seed", "0:1"}).code == 2);
  CHECK(run({"paths", "--m", "4", "--seed", "0:1,9"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"roundtrip", "--n", "2", "--N", "6", "--bijection", "phi"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("specialize and cmpp-check") {
  auto r = run({"specialize", "--n", "2", "--i", "1", "--N", "12"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["status"] == "ok");
  CHECK(j["coefficients"].size() == 13);
  CHECK(j["coefficients"][0] == "1");
  auto c = run({"cmpp-check", "--n", "2", "--k", "0,1,0", "--N", "10"});
  CHECK(c.code == 0);
  CHECK(json::parse(c.out)["status"] == "ok");
}

TEST_CASE("crystal-dot") {
  auto r = run({"crystal-dot", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("digraph", 0) == 0);
}

TEST_CASE("roundtrip and paths") {
  auto r = run({"roundtrip", "--n", "2", "--N", "6", "--bijection", "frobenius"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["failures"] == 0);
  auto l = run({"roundtrip", "--n", "2", "--N", "5", "--bijection", "lambda", "--i", "1"});
  CHECK(l.code == 0);
  CHECK(json::parse(l.out)["grounds"].size() == 1);
  auto p = run({"paths", "--m", "4", "--seed", "0:1,2", "--list"});
  CHECK(p.code == 0);
  auto j = json::parse(p.out);
  CHECK(j["count"].get<std::size_t>() == j["paths"].size());
  CHECK(j["count"].get<int>() > 0);
  CHECK(j["paths"][0].size() == 5);
}

TEST_CASE("thread count does not change the output") {
  const std::vector<std::string> args{"verify-models", "--n", "2", "--N", "8"};
  setenv("CNCHAR_THREADS", "1", 1);
  const auto one = run(args).out;
  setenv("CNCHAR_THREADS", "3", 1);
  const auto three = run(args).out;
  unsetenv("CNCHAR_THREADS");
  CHECK(one == three);
}
