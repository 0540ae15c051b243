#include <sstream>

#include "doctest.h"
#include "hinv/cli.hpp"
#include "hinv/serialize.hpp"

using namespace hinv;

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

std::string data(const std::string& name) { return std::string(HINV_TEST_DATA) + "/" + name + ".json"; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("root literals") {
    CHECK(parse_root_literal("za:4:1") == RootOfUnity(4, 1));
    CHECK(parse_root_literal("zb:6:-1") == RootOfUnity(6, 5));
    CHECK_THROWS_AS(parse_root_literal("a:4:1"), Error);
    CHECK_THROWS_AS(parse_root_literal("za:0:1"), Error);
    CHECK_THROWS_AS(parse_root_literal("za:4"), Error);
  }

  TEST_CASE("classify") {
    const Run r = run({"classify", "--n", "3", "--format", "json"});
    CHECK(r.code == kExitTrue);
    const json j = json::parse(r.out);
    CHECK(j["command"] == "classify");
    CHECK(j["result"]["equivalence_classes"] == 1);
    CHECK(j["expected"]["equivalence_classes"] == 1);
    CHECK(j["match"] == true);
    CHECK(r.out.find("\"equivalence_classes\": 1,") != std::string::npos);

    const Run c = run({"classify", "--n", "2", "--format", "csv"});
    CHECK(c.code == kExitTrue);
    CHECK(c.out.rfind("orbit,lambda_a,lambda_b,iso_class,equiv_class\n", 0) == 0);
    CHECK(run({"classify", "--n", "20"}).code == kExitInput);
  }

  TEST_CASE("orbit") {
    const Run r = run({"orbit", "--n", "4", "--matrix", "1,2,2,-1", "--format", "json"});
    CHECK(r.code == kExitTrue);
    const json j = json::parse(r.out);
    CHECK(j["result"]["canonical"] == "theta3");
    CHECK(j["result"]["P"] == json::parse("[[1,0],[0,1]]"));
    CHECK(run({"orbit", "--n", "4", "--matrix", "1,0,0,1"}).code == kExitInput);
    CHECK(run({"orbit", "--n", "4", "--matrix", "1,0,0"}).code == kExitInput);
  }

  TEST_CASE("check") {
    const Run r = run({"check", "--group", "Z2^2", "--tau", "1,1,0,1", "--lambda", "za:4:1,zb:4:0"});
    CHECK(r.code == kExitTrue);
    const json j = json::parse(r.out);
    CHECK(j["result"]["verdict"] == true);
    const Run f = run({"check", "--group", "Z3^2", "--tau", "1,0,0,1", "--lambda", "za:1:0,zb:1:0"});
    CHECK(f.code == kExitFalse);
    CHECK(json::parse(f.out)["result"]["verdict"] == false);
    CHECK(run({"check", "--group", "Z3^2", "--tau", "1,0,0,1", "--lambda", "za:1:0,zb:1:0", "--mode", "automorphism"})
              .code == kExitTrue);
    CHECK(run({"check", "--group", "Z2^2", "--tau", "1,1,0", "--lambda", "za:4:1,zb:4:0"}).code == kExitInput);
    CHECK(run({"check", "--group", "Z2^2", "--tau", "1,1,0,1", "--lambda", "za:4:1"}).code == kExitInput);
  }

  TEST_CASE("sec3") {
    for (const char* name : {"z4_pair_orth", "v4_pauli_symp", "w_pauli_inverting_orth"}) {
      const Run r = run({"sec3", "--spec", data(name)});
      CHECK(r.code == kExitTrue);
      CHECK(json::parse(r.out)["result"]["verdict"] == true);
    }
    const Run bad = run({"sec3", "--spec", data("bad_z4_second")});
    CHECK(bad.code == kExitFalse);
    CHECK(json::parse(bad.out)["result"]["problem"] == "g''_1 != -tau(g'_j) - g0");
    CHECK(run({"sec3", "--spec", "/nonexistent.json"}).code == kExitInput);
  }

  TEST_CASE("realize and verify-tables") {
    CHECK(run({"realize", "--n", "2"}).code == kExitTrue);
    CHECK(run({"realize", "--n", "2", "--tau", "1,0,0,-1", "--lambda", "za:8:0,zb:8:0"}).code == kExitTrue);
    CHECK(run({"verify-tables", "--n", "8"}).code == kExitTrue);
    CHECK(run({"verify-tables", "--n", "6", "--format", "text"}).code == kExitTrue);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitInput);
    CHECK(run({"bogus"}).code == kExitInput);
    const Run r = run({"classify", "--n", "3", "--bogus"});
    CHECK(r.code == kExitInput);
    CHECK(r.err.find("classify") != std::string::npos);
    CHECK(run({"orbit", "--n", "4", "--matrix", "1,2,2,-1", "--format", "csv"}).code == kExitInput);
    CHECK(run({"classify", "--n", "3", "--format", "xml"}).code == kExitInput);
  }

  TEST_CASE("property: reports are deterministic and exit codes follow the verdict") {
    const std::vector<std::vector<std::string>> cmds{
        {"classify", "--n", "4"},
        {"orbit", "--n", "8", "--matrix", "1,4,0,-1"},
        {"check", "--group", "Z4^2", "--tau", "0,1,1,0", "--lambda", "za:32:8,zb:32:24"},
        {"check", "--group", "Z4^2", "--tau", "0,1,1,0", "--lambda", "za:32:8,zb:32:8"},
        {"sec3", "--spec", data("bad_v4_pauli_t")},
        {"verify-tables", "--n", "4"}};
    for (const auto& c : cmds) {
      CAPTURE(c[0]);
      const Run a = run(c), b = run(c);
      CHECK(a.out == b.out);
      CHECK(a.code == b.code);
      const json j = json::parse(a.out);
      const json& v = j["result"].contains("verdict") ? j["result"]["verdict"] : j["match"];
      CHECK(a.code == (v.get<bool>() ? kExitTrue : kExitFalse));
    }
  }
}
