#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "annular/cli.hpp"

using namespace annular;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("enumerate") {
  const Run text = run({"enumerate", "--m", "2", "--n", "1"});
  CHECK(text.code == kExitOk);
  CHECK(text.out == "+++-\n++-+\n+-++\n-+++\n");
  const Run json = run({"enumerate", "--m", "2", "--n", "1", "--json"});
  CHECK(json.code == kExitOk);
  CHECK(lines(json.out) == 4);
  CHECK(json.out.rfind(R"({"cups":)", 0) == 0);
  CHECK(run({"enumerate", "--m", "0", "--n", "3"}).out.size() == 20 * 7);
}

TEST_CASE("extdim") {
  CHECK(run({"extdim", "--m", "2", "--n", "1", "--alpha", "+-++", "--beta", "+-++"}).out == "2\n");
  CHECK(run({"extdim", "--m", "0", "--n", "1", "--alpha", "+-", "--beta", "-+", "--poincare"}).out == "2q\n");
  CHECK(run({"extdim", "--m", "2", "--n", "1", "--alpha", "+-++", "--beta", "+++-"}).out == "0\n");
  CHECK(run({"extdim", "--m", "2", "--n", "1", "--alpha", "+-", "--beta", "+-++"}).code == kExitUsage);
}

TEST_CASE("multiply") {
  const Run r = run({"multiply", "--m", "0", "--n", "1", "--x", R"({"alpha":"+-","beta":"-+","labels":["Y1"]})",
                     "--y", R"({"alpha":"-+","beta":"+-","labels":["Y2"]})"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.at("terms").size() == 1);
  CHECK(j.at("terms")[0].at("coeff") == 1);
  CHECK(j.at("terms")[0].at("diagram").at("labels") == nlohmann::json{"X"});
  CHECK(run({"multiply", "--m", "0", "--n", "1", "--x", "{", "--y", "{}"}).code == kExitUsage);
}

TEST_CASE("check") {
  const Run pass = run({"check", "--m", "2", "--n", "1", "--suite", "unit"});
  CHECK(pass.code == kExitOk);
  CHECK(nlohmann::json::parse(pass.out).at("passed") == true);

  const Run fail = run({"check", "--m", "0", "--n", "2", "--suite", "assoc"});
  CHECK(fail.code == kExitCounterexample);
  const auto j = nlohmann::json::parse(fail.out);
  CHECK(j.at("failures") == 16);
  CHECK(j.at("counterexample").at("suite") == "assoc");
  CHECK(j.at("counterexample").contains("xy_z"));
  CHECK(run({"check", "--m", "0", "--n", "2", "--suite", "nope"}).code == kExitUsage);
}

TEST_CASE("verify-relations") {
  const Run r = run({"verify-relations", "--max-size", "4"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("satisfying eps: +1 -1") != std::string::npos);
  const Run j = run({"verify-relations", "--max-size", "4", "--json"});
  CHECK(j.code == kExitOk);
  CHECK(j.out.find(R"("satisfying_signs":[1,-1])") != std::string::npos);
}

TEST_CASE("decat") {
  const Run r = run({"decat", "--word", "tangle 0 -> 2: g1", "--m", "0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "[1]\n[-1]\n");
  CHECK(run({"decat", "--word", "tangle 0 -> 2: g7", "--m", "0"}).code == kExitUsage);
  CHECK(run({"decat", "--word", "tangle 1 -> 2: g1", "--m", "0"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"enumerate", "--m", "2"}).code == kExitUsage);
  CHECK(run({"enumerate", "--m", "-1", "--n", "1"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}
