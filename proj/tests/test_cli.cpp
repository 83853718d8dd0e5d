#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "reedy/cli.hpp"

using namespace reedy;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "reedy-cli-test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

std::string write(const std::string& name, const std::string& text) {
  std::string p = temp_path(name);
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, ValidateBuiltins) {
  for (const auto& name : cli::builtin_names()) EXPECT_EQ(run({"validate", "--builtin", name}).code, 0) << name;
}

TEST(Cli, ValidateBrokenIdentityExitsOne) {
  // Delta[0]_+ up to dimension 2 with s_1: X_1 -> X_2 replaced by zero.
  const std::string doc = R"({"kind": "sset", "name": "broken", "levels": [2, 2, 2],
    "faces": [[], [[0, 1], [0, 1]], [[0, 1], [0, 1], [0, 1]]],
    "degens": [[[0, 1]], [[0, 1], [0, 0]]]})";
  auto r = run({"validate", write("broken.json", doc)});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("(k,i,j)=(0,0,0)"), std::string::npos) << r.out;
  // Other commands refuse invalid input.
  EXPECT_EQ(run({"latch", write("broken2.json", doc), "--simplicial", "1"}).code, 2);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run({"validate", temp_path("does-not-exist.json")}).code, 2);
  auto syntax = run({"validate", write("syntax.json", "{\n  \"kind\": ,\n}")});
  EXPECT_EQ(syntax.code, 2);
  EXPECT_NE(syntax.err.find("line 2, column"), std::string::npos) << syntax.err;
  EXPECT_EQ(run({"check", "--builtin", "nope", "flat"}).code, 2);
  EXPECT_EQ(run({"check", "--builtin", "sphere", "shiny"}).code, 2);
  // Kind mismatch.
  EXPECT_EQ(run({"check", "--builtin", "sphere", "good"}).code, 2);
  EXPECT_EQ(run({"check", "--builtin", "good-demo", "flat"}).code, 2);
  EXPECT_EQ(run({"latch", "--builtin", "good-demo", "--simplicial", "9"}).code, 2);
  EXPECT_EQ(run({"latch", "--builtin", "sphere", "--spectral", "-1"}).code, 2);
  EXPECT_EQ(run({"latch", "--builtin", "sphere"}).code, 2);
  EXPECT_EQ(run({"realize", "--builtin", "good-demo"}).code, 2);
  EXPECT_EQ(run({"cofiber", "--builtin", "sphere"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"selftest", "--suite", "9.9"}).code, 2);
  EXPECT_EQ(run({"selftest", "--strategy", "lucky"}).code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, BarSWitnessReplays) {
  auto r = run({"check", "--builtin", "bar-s", "flat", "--format", "json"});
  ASSERT_EQ(r.code, 1);
  json j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "fail");
  const auto& w = j["witness"];
  EXPECT_EQ(w["kind"], "collision");
  EXPECT_NE(w["first"], w["second"]);
  int level = -1;
  for (const auto& l : w["location"])
    if (l["name"] == "level") level = l["value"];
  EXPECT_EQ(level, 2);
  std::string report = write("bar-s-report.json", r.out);
  EXPECT_EQ(run({"check", "--builtin", "bar-s", "flat", "--replay", report}).code, 0);
  // A tampered witness does not replay.
  json bad = j;
  bad["witness"]["second"] = bad["witness"]["first"];
  EXPECT_EQ(run({"check", "--builtin", "bar-s", "flat", "--replay", write("bad.json", bad.dump())}).code, 1);
  json moved = j;
  moved["witness"]["location"][1]["value"] = 0;
  EXPECT_EQ(run({"check", "--builtin", "bar-s", "flat", "--replay", write("moved.json", moved.dump())}).code, 1);
}

TEST(Cli, EveryFailingPropertyReplays) {
  for (const auto& name : cli::builtin_names()) {
    auto d = cli::builtin(name);
    for (const auto& prop : cli::property_names()) {
      CheckReport rep;
      try {
        rep = cli::check_property(*d, prop);
      } catch (const DocumentError&) {
        continue;  // kind mismatch
      }
      if (rep) continue;
      ASSERT_TRUE(rep.witness) << name << " " << prop;
      std::string why;
      EXPECT_TRUE(cli::replay(*d, prop, *rep.witness, why)) << name << " " << prop << ": " << why;
      Witness back = cli::witness_from_json(cli::witness_json(*rep.witness));
      EXPECT_TRUE(cli::replay(*d, prop, back, why)) << name << " " << prop << ": " << why;
    }
  }
}

TEST(Cli, SphereCertificates) {
  EXPECT_EQ(run({"check", "--builtin", "sphere", "flat"}).code, 0);
  auto r = run({"check", "--builtin", "sphere", "positive-flat", "--format", "json"});
  ASSERT_EQ(r.code, 1);
  json j = json::parse(r.out);
  EXPECT_EQ(j["witness"]["clause"], "f(0) is an isomorphism");
}

TEST(Cli, GoodDemoAndZeroMap) {
  EXPECT_EQ(run({"check", "--builtin", "good-demo", "good"}).code, 0);
  EXPECT_EQ(run({"check", "--builtin", "good-demo", "reedy-flat"}).code, 0);
  EXPECT_EQ(run({"check", "--builtin", "constant-sphere", "positive-good"}).code, 1);
  EXPECT_EQ(run({"check", "--builtin", "thm14-demo", "reedy-flat"}).code, 0);
  EXPECT_EQ(run({"check", "--builtin", "bar-s-inclusion", "levelwise"}).code, 0);
}

TEST(Cli, LatchZeroIsZeroObject) {
  auto r = run({"latch", "--builtin", "good-demo", "--simplicial", "0"});
  ASSERT_EQ(r.code, 0);
  Document d = parse_document(r.out);
  ASSERT_EQ(d.kind(), Kind::spectrum_map);
  const auto& x = std::get<SpectrumMap>(d.value).dom();
  for (int n = 0; n <= x.strunc(); ++n)
    for (int k = 0; k <= x.dtrunc(); ++k) EXPECT_EQ(x.level(n).at(k).size(), 1u);
}

TEST(Cli, RealizeConstantIsValue) {
  std::string out = temp_path("realized.json");
  ASSERT_EQ(run({"realize", "--builtin", "constant-sphere", "-o", out}).code, 0);
  Document d = load_document(out);
  EXPECT_TRUE(Spectra::same(std::get<SymSpectrum>(d.value), sphere_spectrum(3, 4)));
}

TEST(Cli, CofiberThenRealize) {
  std::string z = temp_path("z.json"), rz = temp_path("rz.json");
  ASSERT_EQ(run({"cofiber", "--builtin", "thm14-demo", "-o", z}).code, 0);
  ASSERT_EQ(run({"realize", z, "-o", rz}).code, 0);
  EXPECT_EQ(run({"check", rz, "flat"}).code, 0);
}

TEST(Cli, OutputsAreDeterministic) {
  const std::vector<std::vector<std::string>> cmds = {
      {"check", "--builtin", "bar-s", "flat", "--format", "json"},
      {"latch", "--builtin", "bar-s", "--spectral", "2"},
      {"latch", "--builtin", "good-demo", "--simplicial", "2"},
      {"cofiber", "--builtin", "thm14-demo"},
      {"realize", "--builtin", "thm14-demo"},
      {"selftest", "--suite", "4.1", "--cases", "4", "--format", "json"},
  };
  for (const auto& c : cmds) {
    auto a = run(c), b = run(c);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << c[0];
    EXPECT_FALSE(a.out.empty());
  }
  // Files written with -o match stdout.
  std::string p = temp_path("latch.json");
  ASSERT_EQ(run({"latch", "--builtin", "bar-s", "--spectral", "2", "-o", p}).code, 0);
  EXPECT_EQ(slurp(p), run({"latch", "--builtin", "bar-s", "--spectral", "2"}).out);
}

TEST(Cli, SelftestJson) {
  auto r = run({"selftest", "--suite", "lemmas", "--suite", "oracle", "--cases", "5", "--seed", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.out;
  json j = json::parse(r.out);
  ASSERT_EQ(j["suites"].size(), 2u);
  EXPECT_EQ(j["suites"][0]["suite"], "lemmas");
  EXPECT_EQ(j["suites"][1]["seed"], 3);
  EXPECT_TRUE(j["suites"][1]["counterexample"].is_null());
}
