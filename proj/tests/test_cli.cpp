#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "hkmon/cli.hpp"

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result hk(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = hkmon::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string data(std::string const& name) {
    return std::string(HK_DATA_DIR) + "/" + name;
  }

  std::string fixture(std::string const& name) {
    return std::string(HK_FIXTURE_DIR) + "/" + name;
  }

  std::size_t lines(std::string const& s) {
    return std::count(s.begin(), s.end(), '\n');
  }
}  // namespace

TEST_CASE("pi-check") {
  auto r = hk({"pi-check", data("c3.graph")});
  CHECK(r.code == 0);
  CHECK(r.out == "PI: yes\n");
  CHECK(hk({"pi-check", "--cycle", "5", "--json"}).out == "{\n  \"pi\": true\n}\n");
}

TEST_CASE("idempotents --cycle 3") {
  auto r = hk({"idempotents", "--cycle", "3"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 7);
  CHECK(r.out == "1\nx1\nx2\nx1x2\nx3\nx3x1\nx2x3\n");
  auto j = nlohmann::json::parse(hk({"idempotents", "--path", "3", "--json"}).out);
  CHECK(j["count"] == 8);
}

TEST_CASE("rep") {
  auto r = hk({"rep", "--builtin", "M1", "--lambda", "1", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["dim"] == 1);
  CHECK(r.out.find("\"dim\": 1") != std::string::npos);

  auto m0 = hk({"rep", "--builtin", "M0", "--lambda", "-1", "--json"});
  REQUIRE(m0.code == 0);
  auto j0 = nlohmann::json::parse(m0.out);
  CHECK(j0["lambda"] == "-1");
  CHECK(j0["dim"] == 2);

  CHECK(nlohmann::json::parse(hk({"rep", "--builtin", "M1", "--lambda", "2/3", "--json"}).out)["dim"]
        == 3);
}

TEST_CASE("usage errors exit 2") {
  auto zero = hk({"rep", "--builtin", "M1", "--lambda", "0"});
  CHECK(zero.code == 2);
  CHECK(zero.err.find("zero map") != std::string::npos);
  CHECK(hk({"equal", "--cycle", "3", "--budget", "0", "x1", "x2"}).code == 2);
  CHECK(hk({"pi-check", "--cycle", "3", "--bogus"}).code == 2);
  CHECK(hk({"pi-check", "/nonexistent/graph.txt"}).code == 2);
  CHECK(hk({}).code == 2);
  CHECK(hk({"frobnicate"}).code == 2);
  CHECK(hk({"rep", "--lambda", "1"}).code == 2);
  CHECK(hk({"rep", "--builtin", "M1", "--lambda", "0.5"}).code == 2);
  CHECK(hk({"equal", "--cycle", "3", "x1"}).code == 2);
  CHECK(hk({"pi-check", "--cycle", "3", "--path", "2"}).code == 2);
  CHECK(hk({"rep", "--help"}).code == 0);
}

TEST_CASE("domain errors exit 1") {
  CHECK(hk({"fmap", "--path", "3", "x1"}).code == 1);
  CHECK(hk({"fmap", "--cycle", "3", "x4"}).code == 1);
  CHECK(hk({"pi-check", "--cycle", "2"}).code == 1);
  CHECK(hk({"phi", "--cycle", "3", "x3x2x1", "x1"}).code == 1);
  auto bad = hk({"pi-check", fixture("bad_double_arrow.graph")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("line 3") != std::string::npos);
  CHECK(hk({"rep", "--data", fixture("not_sandwich.txt"), "--lambda", "1"}).code
        == 1);
}

TEST_CASE("equal, normalize, fmap, classify, phi") {
  auto eq = hk({"equal", "--cycle", "3", "x1x2x1", "x2x1x2"});
  CHECK(eq.code == 0);
  CHECK(eq.out.rfind("equal\n", 0) == 0);
  auto ne = hk({"equal", "--cycle", "3", "--json", "3 2 1", "3 1 2"});
  CHECK(nlohmann::json::parse(ne.out)["verdict"] == "distinct");
  CHECK(hk({"normalize", "--cycle", "3", "x1x2x1"}).out == "x1x2\n");
  CHECK(hk({"normalize", "--cycle", "3", "e"}).out == "1\n");
  CHECK(hk({"fmap", "--cycle", "3", "x3x1x2"}).out == "[src=(3,3,3); off=(0,0,1)]\n");
  CHECK(hk({"support", "--cycle", "3", "x3x1x2"}).out == "{3}\n");
  CHECK(hk({"classify", "--cycle", "3", "x3x1x2"}).out == "0\n");
  CHECK(hk({"classify", "--cycle", "3", "x1"}).out == "top\n");
  CHECK(hk({"phi", "--cycle", "3", "x1", "x1x1"}).out == "1\n");
  CHECK(hk({"phi", "--cycle", "3", "x1", "x2"}).out == "0\n");
}

TEST_CASE("sandwich, verify, extend") {
  auto s = hk({"sandwich", "--builtin", "M0", "--json"});
  REQUIRE(s.code == 0);
  auto j = nlohmann::json::parse(s.out);
  CHECK(j["determinant"] == "-lambda^2 - lambda");
  auto s1 = hk({"sandwich", "--builtin", "M1", "--lambda", "1", "--json"});
  CHECK(nlohmann::json::parse(s1.out)["rank"] == 1);

  auto v = hk({"verify", "--builtin", "M0", "--lambda", "1/3", "--kmax", "5"});
  CHECK(v.code == 0);
  CHECK(v.out.find("ok") != std::string::npos);
  auto x = hk({"extend", "--builtin", "M1", "--lambda", "7", "--json"});
  CHECK(x.code == 0);
  CHECK(nlohmann::json::parse(x.out)["multiplicative"] == true);
}

TEST_CASE("catalog") {
  auto r = hk({"catalog", "--cycle", "3", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pi"] == true);
  CHECK(j["one_dim_count"] == 7);
  CHECK(j["components"].size() == 1);
  CHECK(j["components"][0]["descriptors"].size() == 9);
  auto twice = hk({"catalog", "--cycle", "3", "--json"});
  CHECK(twice.out == r.out);
  auto text = hk({"catalog", data("c3_plus_vertex.graph")});
  CHECK(text.code == 0);
  CHECK(text.out.find("14") != std::string::npos);
}
