// One line per acceptance criterion; exit status 1 if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "reedy/cli.hpp"
#include "reedy/harness.hpp"

using namespace reedy;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Cmd {
  int code;
  std::string out;
};

// Outputs of every command run, for the determinism criterion.
std::vector<std::pair<std::vector<std::string>, Cmd>> g_log;

Cmd cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Cmd c{cli::run(args, out, err), out.str()};
  g_log.emplace_back(args, c);
  return c;
}

int witness_level(const json& w) {
  for (const auto& l : w["location"])
    if (l["name"] == "level") return l["value"];
  return -1;
}

json suite(const std::string& name, int cases) {
  Cmd c = cli_run({"selftest", "--suite", name, "--seed", "1", "--cases", std::to_string(cases), "--format", "json"});
  json j = json::parse(c.out)["suites"][0];
  j["exit"] = c.code;
  return j;
}

Outcome suite_outcome(const json& s) {
  std::ostringstream d;
  d << s["passes"].get<int>() << "/" << s["cases"].get<int>() << " pass, " << s["discards"].get<int>() << " discards";
  for (const auto& n : s["notes"]) d << ", " << n.get<std::string>();
  if (!s["counterexample"].is_null()) d << "; counterexample: " << s["counterexample"]["report"].get<std::string>();
  if (s["starved"].get<bool>()) d << "; starved: " << s["starvation"].get<std::string>();
  return {s["exit"] == 0 && s["verdict"] == "pass" && s["cases"].get<int>() >= s["requested"].get<int>(), d.str()};
}

Outcome c1() {
  Cmd c = cli_run({"check", "--builtin", "bar-s", "flat", "--format", "json"});
  json j = json::parse(c.out);
  const json& w = j["witness"];
  if (c.code != 1 || w.is_null()) return {false, "no failure reported"};
  std::string why;
  bool replays = cli::replay(*cli::builtin("bar-s"), "flat", cli::witness_from_json(w), why);
  std::ostringstream d;
  d << "fails at level " << witness_level(w) << ", elements " << w["first"] << " and " << w["second"] << " -> "
    << w["image"] << ", replay " << (replays ? "reproduces" : "fails: " + why);
  return {witness_level(w) == 2 && w["kind"] == "collision" && replays, d.str()};
}

Outcome c2() {
  Cmd flat = cli_run({"check", "--builtin", "sphere", "flat", "--format", "json"});
  Cmd pos = cli_run({"check", "--builtin", "sphere", "positive-flat", "--format", "json"});
  json j = json::parse(pos.out);
  const bool ok = flat.code == 0 && pos.code == 1 && j["witness"]["clause"] == "f(0) is an isomorphism" &&
                  witness_level(j["witness"]) == 0;
  return {ok, "flat exit " + std::to_string(flat.code) + ", positive-flat exit " + std::to_string(pos.code) +
                  " at clause '" + j["witness"]["clause"].get<std::string>() + "'"};
}

std::vector<std::function<Outcome()>> criteria() {
  return {
      c1,
      c2,
      [] { return suite_outcome(suite("unit", 50)); },
      [] { return suite_outcome(suite("3.2", 200)); },
      [] {
        Outcome a = suite_outcome(suite("4.1", 100)), b = suite_outcome(suite("4.2", 100));
        return Outcome{a.pass && b.pass, "4.1: " + a.detail + "; 4.2: " + b.detail};
      },
      [] { return suite_outcome(suite("1.4", 100)); },
      [] { return suite_outcome(suite("lemmas", 20)); },
      [] { return suite_outcome(suite("bisimplicial", 200)); },
      [] { return suite_outcome(suite("oracle", 200)); },
      [] {
        auto f = harness::thm14_demo();
        auto z = pointwise_cofiber(f);
        auto rz = realize(z.object);
        auto rf = realize_map(f);
        auto po = pushout<Spectra>(rf, Spectra::zero_map(rf.dom(), Spectra::zero_like(rf.dom())));
        const bool same = serialize(Document{"z", rz}) == serialize(Document{"z", po.object});
        auto flat = is_cofibrant(rz, Model::flat);
        Cmd z1 = cli_run({"cofiber", "--builtin", "thm14-demo"});
        Cmd z2 = cli_run({"realize", "--builtin", "thm14-demo"});
        return Outcome{same && bool(flat) && z1.code == 0 && z2.code == 0,
                       std::string("|cofiber f| ") + (same ? "equals" : "differs from") + " cofiber |f|, 0 -> |Z| " +
                           (flat ? "flat" : "not flat")};
      },
      [] {
        auto first = g_log;
        int diffs = 0;
        for (const auto& [args, c] : first) {
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          diffs += code != c.code || out.str() != c.out;
        }
        return Outcome{diffs == 0 && !first.empty(),
                       std::to_string(first.size()) + " commands re-run, " + std::to_string(diffs) + " differ"};
      },
  };
}

}  // namespace

int main() {
  const double budget[] = {1, 1, 60, 300, 600, 300, 60, 60, 60, 30, 1e9};
  int failures = 0;
  auto all = criteria();
  for (std::size_t i = 0; i < all.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = all[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < budget[i];
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("criterion %2zu %s (%.2f s%s): %s\n", i + 1, pass ? "PASS" : "FAIL", secs,
                in_time ? "" : ", over budget", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
