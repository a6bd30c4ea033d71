#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "interlace/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = interlace::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(INTERLACE_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("edgewise") {
  CHECK(run({"edgewise", "--r", "3", "--n", "3", "--component", "0"}).out == "0,1,1\n");
  CHECK(run({"edgewise", "--r", "2", "--n", "4", "--component", "0"}).out == "0,0,1\n");
  const Result all = run({"edgewise", "--r", "3", "--n", "2"});
  CHECK(all.code == 0);
  CHECK(all.out == "0,2\n0,1\n0,0,1\n");
  const Result verified = run({"edgewise", "--r", "3", "--n", "3", "--verify"});
  CHECK(verified.code == 0);
  CHECK(verified.out.find("verify: PASS") != std::string::npos);
  CHECK(run({"edgewise", "--r", "3", "--n", "2", "--gamma", "1,1,1", "--component", "0"}).out == "0,1\n");
  CHECK(run({"edgewise", "--r", "1", "--n", "2"}).code == 2);
  CHECK(run({"edgewise", "--r", "3", "--n", "2", "--component", "3"}).code == 2);
  CHECK(run({"edgewise", "--r", "3", "--n", "2", "--gamma", "2,0,0"}).code == 2);
  CHECK(run({"edgewise", "--r", "3"}).code == 2);
}

TEST_CASE("json output carries the stable keys") {
  const Result r = run({"edgewise", "--r", "3", "--n", "3", "--component", "0", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"command", "params", "status", "result"}) CHECK(j.contains(key));
  CHECK(j["command"] == "edgewise");
  CHECK(j["params"]["r"] == 3);

  const Result f = run({"check", "compatible", "2,3,1", "2,-3,1", "--unchecked", "--json"});
  CHECK(f.code == 1);
  const auto jf = nlohmann::json::parse(f.out);
  CHECK(jf["status"] == "FAIL");
  CHECK(jf.contains("witness"));
  CHECK(jf["witness"].contains("weights"));
  CHECK(jf["witness"].contains("combination"));
}

TEST_CASE("fh") {
  CHECK(run({"fh", "--f", "1,3,3,1"}).out == "1,0,0,0\n");
  CHECK(run({"fh", "--h", "1,1,1"}).out == "1,3,3\n");
  CHECK(run({"fh", "--f", "2,3"}).code == 2);
  CHECK(run({"fh"}).code == 2);
}

TEST_CASE("check") {
  const Result rr = run({"check", "realrooted", "0,1,1"});
  CHECK(rr.code == 0);
  CHECK(rr.out == "PASS\n");
  CHECK(run({"check", "realrooted", "1,0,1"}).code == 1);
  CHECK(run({"check", "interleave", "0,1", "-1,0,1"}).code == 0);
  CHECK(run({"check", "interleave", "-1,0,1", "0,0,1"}).code == 1);
  CHECK(run({"check", "compatible", "0,1", "1,1"}).out.rfind("PASS_SAMPLED", 0) == 0);
  const Result fail = run({"check", "compatible", "2,3,1", "2,-3,1", "--unchecked"});
  CHECK(fail.code == 1);
  CHECK(fail.out.rfind("FAIL\n", 0) == 0);
  CHECK(fail.out.find("\"combination\"") != std::string::npos);
  // Without --unchecked the negative coefficient is a usage error.
  CHECK(run({"check", "compatible", "2,3,1", "2,-3,1"}).code == 2);
  CHECK(run({"check", "conditions-ab", "0", "0,1", "0,1"}).code == 0);
  CHECK(run({"check", "conditions-ab", "0,1", "1"}).code == 1);
  CHECK(run({"check", "realrooted", "1,a"}).code == 2);
  CHECK(run({"check", "bogus", "1"}).code == 2);
}

TEST_CASE("matrix") {
  const Result c = run({"matrix", "classify-all"});
  CHECK(c.code == 0);
  CHECK(c.out.find("allowed: 40, forbidden: 41, disagreements: 0") != std::string::npos);

  const Result ex1 = run({"matrix", "check", data("ferrers_example1.json")});
  CHECK(ex1.code == 0);
  CHECK(ex1.out == "preserves: PASS, ferrers: PASS\n");
  CHECK(run({"matrix", "check", data("ferrers_example2.json")}).code == 0);
  const Result bad = run({"matrix", "check", data("forbidden_1x.json")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("submatrix") != std::string::npos);
  CHECK(run({"matrix", "check", data("malformed.json")}).code == 2);
  CHECK(run({"matrix", "check", data("missing.json")}).code == 2);

  const Result closure = run({"matrix", "closure"});
  CHECK(closure.code == 0);
  CHECK(closure.out.find("size: 40") != std::string::npos);
  CHECK(closure.out.find("equals allowed set: yes") != std::string::npos);

  const Result applied = run({"matrix", "apply", data("ferrers_example1.json"), "--polys", "1;1;1;1"});
  CHECK(applied.code == 0);
  CHECK(applied.out == "4\n3\n3,1\n0,4\n");
  const Result verified =
      run({"matrix", "apply", data("ferrers_example1.json"), "--polys", "1;1,1;0,2,1;0,0,0,1", "--verify"});
  CHECK(verified.code == 2);  // not an F+ input
  CHECK(run({"matrix", "apply", data("ferrers_example1.json"), "--polys", "1;1"}).code == 2);
}

TEST_CASE("words and roots") {
  CHECK(run({"words", "--n", "4", "--r", "3", "--gamma", "1,1,1", "--closed"}).out == "0,2,0,2,0\n");
  CHECK(run({"words", "--n", "2", "--r", "2"}).out == "0,1,0\n");
  const Result roots = run({"roots", "1,2,1"});
  CHECK(roots.code == 0);
  CHECK(roots.out.find("-1/1") != std::string::npos);
  CHECK(run({"roots", "0"}).code == 2);
  CHECK(run({"roots", "-2,0,1", "--width", "1/100"}).code == 0);
  CHECK(run({"roots", "-2,0,1", "--width", "0"}).code == 2);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
