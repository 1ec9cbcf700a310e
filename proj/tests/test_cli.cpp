#include <sstream>

#include "ainfty/cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace ainfty;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string model_path(const char* name) { return std::string(AINFTY_EXAMPLES_DIR) + "/" + name; }

}  // namespace

TEST_CASE("relation subcommand") {
  const auto r = run({"relation", "--i", "2", "--j", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("Δ2∘m2") != std::string::npos);
  CHECK(r.out.find("(m2⊗m2)∘σ{2,2}∘(Δ2⊗Δ2)") != std::string::npos);

  const auto a = run({"relation", "--i", "2", "--j", "2", "--ascii"});
  CHECK(a.out.find("(m2 x m2) . s{2,2} . (D2 x D2)") != std::string::npos);

  const auto j = run({"relation", "--i", "3", "--j", "2", "--format", "json"});
  CHECK(j.code == kExitOk);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["label"] == "(3,2)");
  CHECK(doc["rhs"].size() == 2);

  const auto l = run({"relation", "--i", "2", "--j", "2", "--format", "latex"});
  CHECK(l.out.rfind("\\Delta_{2}m_{2} = ", 0) == 0);
}

TEST_CASE("faces and diagonal subcommands") {
  const auto f = run({"faces", "--n", "4", "--format", "json"});
  CHECK(f.code == kExitOk);
  const auto doc = nlohmann::json::parse(f.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(f.out.find("\"(1,(1,2))\"") != std::string::npos);

  const auto d = run({"diagonal", "--n", "3"});
  CHECK(d.code == kExitOk);
  CHECK(d.out.find("(2,1) ⊗ 3") != std::string::npos);
  CHECK(d.out.find("3 ⊗ (1,2)") != std::string::npos);
  CHECK(run({"diagonal", "--n", "4", "--all", "--format", "json"}).code == kExitOk);
  // beyond the diagonal bound
  CHECK(run({"diagonal", "--n", "8"}).code == kExitUsage);
}

TEST_CASE("expand subcommand") {
  const auto e = run({"expand", "--imax", "2", "--jmax", "2"});
  CHECK(e.code == kExitOk);
  CHECK(e.out.find("ainfty 2") != std::string::npos);
  CHECK(e.out.find("coainfty 2") != std::string::npos);
  CHECK(e.out.find("(2,2)") != std::string::npos);
  const auto j = run({"expand", "--imax", "3", "--jmax", "2", "--format", "json", "--residual"});
  CHECK(j.code == kExitOk);
  CHECK(nlohmann::json::parse(j.out)["schema_version"] == 1);
}

TEST_CASE("verify subcommand exit codes") {
  const auto good = run({"verify", "--model", model_path("z2_group_bialgebra.json"), "--imax", "2", "--jmax", "2"});
  CHECK(good.code == kExitOk);
  const auto ground = run({"verify", "--model", model_path("ground_field.json"), "--imax", "3", "--jmax", "3"});
  CHECK(ground.code == kExitOk);
  const auto bad = run({"verify", "--model", model_path("adversarial.json"), "--imax", "2", "--jmax", "2",
                        "--format", "json"});
  CHECK(bad.code == kExitVerificationFailed);
  const auto doc = nlohmann::json::parse(bad.out);
  CHECK(doc["schema_version"] == 1);
  bool witnessed = false;
  for (const auto& c : doc["checks"]) {
    if (c["label"] != "(2,2)") continue;
    CHECK(c["pass"] == false);
    for (const auto& w : c["witnesses"]) witnessed = witnessed || w == nlohmann::json::array({1, 1});
  }
  CHECK(witnessed);
  CHECK(run({"verify", "--model", model_path("missing.json"), "--imax", "2", "--jmax", "2"}).code == kExitUsage);
}

TEST_CASE("normalize subcommand") {
  const auto r = run({"normalize", "(1 x m2) . (m2 x 1 x 1)", "--ascii"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "m2 x m2\n");
  const auto bad = run({"normalize", "m2 . m3"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("error:") != std::string::npos);
  CHECK(run({"normalize", "m2 . ("}).code == kExitUsage);
}

TEST_CASE("selfcheck subcommand") {
  const auto r = run({"selfcheck", "--only", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("[PASS] 1", 0) == 0);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({"relation", "--i", "2"}).code == kExitUsage);
  CHECK(run({"relation", "--i", "1", "--j", "2"}).code == kExitUsage);
  CHECK(run({"faces", "--n", "4", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}
