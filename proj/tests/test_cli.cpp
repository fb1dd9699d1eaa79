#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "nlie/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = nlie::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented invocations") {
  auto r = call({"bracket", "--n", "3", "x1", "x2", "x3"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  r = call({"fj", "--n", "3", "--trials", "100", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out == "OK 100/100\n");
}

TEST_CASE("errors") {
  CHECK(call({"frobnicate"}).code != 0);
  CHECK(call({"bracket", "--n", "3", "x1", "x2 +", "x3"}).code == 2);
  CHECK(call({"freudenthal", "--n", "3", "--weight", "1,a"}).code == 2);
  CHECK(call({"irrep", "--n", "4", "--weight", "2,2,2"}).code == 2);
  CHECK(call({"singular", "--n", "3", "--weight", "0,0", "--depth", "9"}).code != 0);
}

TEST_CASE("every subcommand emits a sorted JSON envelope") {
  std::vector<std::vector<std::string>> invocations = {
      {"bracket", "--n", "3", "x1*x2", "x2", "x3"},
      {"fj", "--n", "3", "--trials", "3", "--algebra", "wn"},
      {"ad", "--n", "3", "x1 ^ x2"},
      {"wedge-bracket", "--n", "3", "x1 ^ x2", "x3 ^ x1"},
      {"qgen", "--n", "3", "--case", "1a", "--limit", "2"},
      {"freudenthal", "--n", "3", "--weight", "1,1"},
      {"irrep", "--n", "3", "--weight", "0,1"},
      {"singular", "--n", "3", "--weight", "0,0", "--depth", "2"},
      {"classify", "--n", "3", "--grid", "0", "--case", "1a"},
      {"fixtures", "--n", "3", "--equation", "29"},
  };
  for (auto args : invocations) {
    args.push_back("--emit");
    args.push_back("json");
    auto r = call(args);
    INFO(args.front());
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == args.front());
    CHECK(j.contains("inputs"));
    CHECK(j.contains("result"));
    CHECK(j.contains("version"));
    CHECK(call(args).out == r.out);
  }
}

TEST_CASE("JSON payloads") {
  auto j = nlohmann::json::parse(call({"ad", "--n", "3", "x1 ^ x2", "--emit", "json"}).out);
  CHECK(j["result"]["field"] == "0;0;1");
  j = nlohmann::json::parse(call({"classify", "--n", "3", "--grid", "1", "--case", "1a", "--emit", "json"}).out);
  CHECK(j["result"]["reports"].size() == 4);
  CHECK(j["result"]["admissible"][0] == std::vector<int>{0, 0});
  j = nlohmann::json::parse(call({"singular", "--n", "3", "--weight", "0,0", "--depth", "1", "--emit", "json"}).out);
  CHECK(j["result"]["nontrivial_count"] == 3);
  CHECK(j["result"]["singular_vectors"][1]["depth"] == 1);
  j = nlohmann::json::parse(call({"qgen", "--n", "3", "--case", "1a", "--limit", "1", "--emit", "json"}).out);
  CHECK(j["result"]["count"] == 486);
  CHECK(j["result"]["generators"][0]["spec"].size() == 4);
  CHECK(j["result"]["generators"][0]["closed_form_equals_direct"] == true);
}
