#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "gsg/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = gsg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json report(const Run& r) { return json::parse(r.out); }

}  // namespace

TEST_CASE("cli: gregory report") {
  const Run r = run({"gregory", "--n", "6"});
  REQUIRE(r.code == 0);
  const json j = report(r);
  CHECK(j["command"] == "gregory");
  CHECK(j["inputs"]["n"] == 6);
  CHECK(j["results"]["coefficients"][6]["value"] == "-863/60480");
  CHECK(j["violations"].empty());
  CHECK(j["version"] == gsg::cli::version());
  const Run csv = run({"gregory", "--n", "2", "--format", "csv"});
  CHECK(csv.out == "n,num,den,value\n0,1,1,1\n1,1,2,0.5\n2,-1,12,-0.083333333333333329\n");
}

TEST_CASE("cli: usage errors exit 2 with text on stderr") {
  for (const auto& args : std::vector<std::vector<std::string>>{{},
                                                                {"nosuch"},
                                                                {"gregory", "--bogus"},
                                                                {"gregory", "--n", "x"},
                                                                {"search"},
                                                                {"search", "--functional", "a9"},
                                                                {"y-eval", "--a", "1"},
                                                                {"lemma3-check", "--tau", "2"},
                                                                {"coeffs", "--atoms", "[{\"t\": 0.3, \"theta\": 0}]"},
                                                                {"coeffs", "--atoms", "not json"},
                                                                {"gregory", "--format", "xml"}}) {
    const Run r = run(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("cli: help goes to stdout with exit 0") {
  const Run r = run({"y-eval", "--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("CSV columns: a,b,c,value,branch,oracle,diff") != std::string::npos);
}

TEST_CASE("cli: y-eval with oracle") {
  const json j = report(run({"y-eval", "--a", "1", "--b", "2", "--c", "1", "--check-oracle"}));
  CHECK(j["results"]["value"] == 4.0);
  CHECK(j["results"]["oracle_agrees"] == true);
  CHECK(std::abs(j["results"]["oracle"].get<double>() - 4.0) < 1e-6);
}

TEST_CASE("cli: verify-bounds small run") {
  const Run r = run({"verify-bounds", "--samples", "500", "--seed", "3"});
  CHECK(r.code == 0);
  const json j = report(r);
  CHECK(j["violations"].empty());
  CHECK(j["results"]["samples"] == 500);
  CHECK(run({"verify-bounds", "--samples", "500", "--seed", "3"}).out == r.out);
}

TEST_CASE("cli: seeded search output is reproducible") {
  const std::vector<std::string> args{"search", "--functional", "a3", "--restarts", "4", "--seed", "5"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const json j = report(a);
  CHECK(j["results"]["bound"] == "1/4");
  CHECK(j["results"]["history"].size() == 4);
  const Run fs = run({"search", "--functional", "fs", "--mu", "3", "--restarts", "4"});
  CHECK(report(fs)["results"]["bound"] == "2/3");
}

TEST_CASE("cli: psi-curve defaults to CSV") {
  const Run r = run({"psi-curve", "--samples", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("theta,re,im\n", 0) == 0);
  const json j = report(run({"psi-curve", "--samples", "8", "--format", "json"}));
  CHECK(j["results"]["points"].size() == 8);
}

TEST_CASE("cli: remaining subcommands succeed") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"extremal"},
           {"coeffs", "--atoms", R"([{"t": 0.5, "theta": 0}, {"t": 0.5, "theta": 3.14159}])"},
           {"fs-sweep", "--mu", "0,1/3", "--restarts", "4"},
           {"a6-explore", "--restarts", "4"},
           {"lemma3-check"},
           {"lemma-curves"},
           {"bounds"},
           {"derive"}}) {
    const Run r = run(args);
    CHECK_MESSAGE(r.code == 0, (args[0] + ": " + r.err));
    CHECK_NOTHROW(report(r));
  }
}

TEST_CASE("cli: a condition that fails is a result, not a violation") {
  const Run r = run({"lemma3-check", "--tau", "1/2", "--sigma", "1/2", "--psi", "2", "--rho", "0"});
  CHECK(r.code == 0);
  CHECK(report(r)["results"]["holds"] == false);
}
