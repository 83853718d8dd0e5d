#include "reedy/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "reedy/harness.hpp"

namespace reedy::cli {

using nlohmann::json;

std::vector<std::string> builtin_names() {
  return {"bar-s", "sphere", "constant-sphere", "good-demo", "thm14-demo", "bar-s-inclusion"};
}

std::optional<Document> builtin(const std::string& name) {
  constexpr int N = 3, D = 4;
  if (name == "bar-s") return Document{name, bar_s(N, D)};
  if (name == "sphere") return Document{name, sphere_spectrum(N, D)};
  if (name == "constant-sphere") return Document{name, constant_simplicial(sphere_spectrum(N, D), D)};  // square, so it realizes
  if (name == "good-demo") return Document{name, harness::good_demo()};
  if (name == "thm14-demo") return Document{name, harness::thm14_demo()};
  if (name == "bar-s-inclusion") return Document{name, bar_s_inclusion(N, D)};
  return std::nullopt;
}

std::vector<std::string> property_names() {
  return {"levelwise",  "positive-levelwise", "flat",           "positive-flat",       "good",
          "positive-good", "reedy-levelwise", "reedy-flat", "reedy-positive-flat", "reedy-positive-levelwise"};
}

namespace {

[[noreturn]] void kind_error(const Document& d, const std::string& property, const char* wanted) {
  throw DocumentError("/kind", "property " + property + " needs " + wanted + ", got " + to_string(d.kind()));
}

// The spectrum map a spectrum-level property talks about.
SpectrumMap spectrum_target(const Document& d, const std::string& property) {
  if (d.kind() == Kind::spectrum) {
    const auto& x = std::get<SymSpectrum>(d.value);
    return Spectra::zero_map(Spectra::zero_like(x), x);
  }
  if (d.kind() == Kind::spectrum_map) return std::get<SpectrumMap>(d.value);
  kind_error(d, property, "a spectrum or spectrum-map");
}

SimplicialSpectrumMap simplicial_target(const Document& d, const std::string& property) {
  if (d.kind() == Kind::simplicial_spectrum) return zero_source(std::get<SimplicialSpectrum>(d.value));
  if (d.kind() == Kind::simplicial_spectrum_map) return std::get<SimplicialSpectrumMap>(d.value);
  kind_error(d, property, "a simplicial-spectrum or simplicial-spectrum-map");
}

bool reedy_model(const std::string& property, Model& m) {
  const std::string prefix = "reedy-";
  return property.rfind(prefix, 0) == 0 && parse_model(property.substr(prefix.size()), m);
}

}  // namespace

CheckReport check_property(const Document& d, const std::string& property) {
  Model m;
  if (parse_model(property, m)) return check_cofibration(spectrum_target(d, property), m);
  if (property == "good" || property == "positive-good") {
    if (d.kind() != Kind::simplicial_spectrum) kind_error(d, property, "a simplicial-spectrum");
    const auto& x = std::get<SimplicialSpectrum>(d.value);
    return property == "good" ? is_good(x) : is_positive_good(x);
  }
  if (reedy_model(property, m)) return is_reedy_cofibration(simplicial_target(d, property), m);
  throw DocumentError("property", "unknown property " + property);
}

namespace {

bool replay_on_spectrum_map(const SpectrumMap& g, const Witness& w, std::string& why) {
  const int n = w.coordinate("level"), dim = w.coordinate("dim");
  if (n < 0 || dim < 0 || n > g.dom().strunc() || dim > g.dom().dtrunc()) {
    why = "witness location is outside the truncation";
    return false;
  }
  if (w.clause.find("latching map is a monomorphism") != std::string::npos) {
    if (replay_flat_witness(g, w)) return true;
    why = "the latching map does not identify the cited elements";
    return false;
  }
  const PointedMap c = g.component(n).component(dim);
  if (w.kind == Witness::Kind::missed) {
    if (w.image >= c.cod().size()) {
      why = "cited element is out of range";
      return false;
    }
    for (Index e = 0; e < c.dom().size(); ++e)
      if (c(e) == w.image) {
        why = "cited element is in the image";
        return false;
      }
    return true;
  }
  if (w.kind != Witness::Kind::collision || w.first == w.second || w.first >= c.dom().size() ||
      w.second >= c.dom().size()) {
    why = "witness does not cite two distinct elements";
    return false;
  }
  if (c(w.first) == c(w.second) && c(w.first) == w.image) return true;
  why = "the cited elements do not collide";
  return false;
}

}  // namespace

bool replay(const Document& d, const std::string& property, const Witness& w, std::string& why) {
  Model m;
  if (parse_model(property, m)) return replay_on_spectrum_map(spectrum_target(d, property), w, why);
  const int k = w.coordinate("degree");
  if (property == "good" || property == "positive-good") {
    if (d.kind() != Kind::simplicial_spectrum) kind_error(d, property, "a simplicial-spectrum");
    const auto& x = std::get<SimplicialSpectrum>(d.value);
    if (k < 0 || k > x.trunc()) {
      why = "witness degree is outside the truncation";
      return false;
    }
    if (w.clause.rfind("s_", 0) == 0) {
      const int i = std::atoi(w.clause.c_str() + 2);
      if (i < 0 || i > k || k >= x.trunc()) {
        why = "witness names no degeneracy";
        return false;
      }
      return replay_on_spectrum_map(x.degen(k, i), w, why);
    }
    const SymSpectrum& xk = x.at(k);
    return replay_on_spectrum_map(Spectra::zero_map(Spectra::zero_like(xk), xk), w, why);
  }
  if (reedy_model(property, m)) {
    SimplicialSpectrumMap f = simplicial_target(d, property);
    if (k < 0 || k > f.trunc()) {
      why = "witness degree is outside the truncation";
      return false;
    }
    return replay_on_spectrum_map(reedy_corner_map<Spectra>(f, k).map, w, why);
  }
  throw DocumentError("property", "unknown property " + property);
}

json witness_json(const Witness& w) {
  json loc = json::array();
  for (const auto& [name, value] : w.location) loc.push_back({{"name", name}, {"value", value}});
  return {{"kind", to_string(w.kind)}, {"location", loc}, {"first", w.first}, {"second", w.second},
          {"image", w.image},          {"clause", w.clause}, {"path", w.path}};
}

Witness witness_from_json(const json& j) {
  auto fail = [](const std::string& where, const std::string& what) -> Witness { throw DocumentError(where, what); };
  if (!j.is_object()) return fail("/witness", "expected an object");
  Witness w;
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "collision") w.kind = Witness::Kind::collision;
    else if (kind == "missed") w.kind = Witness::Kind::missed;
    else if (kind == "identity") w.kind = Witness::Kind::identity;
    else return fail("/witness/kind", "unknown witness kind " + kind);
    for (const auto& l : j.at("location")) w.location.emplace_back(l.at("name").get<std::string>(), l.at("value").get<int>());
    w.first = j.at("first").get<Index>();
    w.second = j.at("second").get<Index>();
    w.image = j.at("image").get<Index>();
    w.clause = j.value("clause", "");
    w.path = j.value("path", "");
  } catch (const json::exception& e) {
    return fail("/witness", e.what());
  }
  return w;
}

namespace {

struct Io {
  std::ostream& out;
  std::ostream& err;
  bool color;

  std::string paint(const std::string& s, const char* code) const {
    return color ? std::string("\033[") + code + "m" + s + "\033[0m" : s;
  }
  std::string verdict(bool ok) const { return ok ? paint("PASS", "32") : paint("FAIL", "31"); }
};

std::string trunc_text(const Document& d) {
  json t = truncation(d);
  std::string s;
  for (const char* key : {"K", "N", "D"})
    if (t.contains(key)) s += (s.empty() ? "" : " ") + std::string(key) + "=" + std::to_string(t[key].get<int>());
  return s.empty() ? "" : " up to " + s;
}

struct Input {
  std::string file;
  std::string builtin;

  // Files other than `validate`'s input must be well formed before any construction runs.
  Document load(bool check_structure = true) const {
    if (!builtin.empty()) {
      if (!file.empty()) throw DocumentError("arguments", "give either a file or --builtin, not both");
      auto d = cli::builtin(builtin);
      if (!d) throw DocumentError("--builtin", "unknown built-in " + builtin);
      return *d;
    }
    if (file.empty()) throw DocumentError("arguments", "no input: give a file or --builtin NAME");
    Document d = load_document(file);
    if (check_structure)
      if (auto r = validate(d); !r)
        throw DocumentError(file, "invalid " + std::string(to_string(d.kind())) + ": " +
                                      (r.witness ? r.witness->describe() : r.detail) + " (see `validate`)");
    return d;
  }
};

void emit(const Io& io, const Document& d, const std::string& path) {
  if (path.empty() || path == "-") {
    io.out << serialize(d);
    return;
  }
  save_document(d, path);
  io.out << "wrote " << to_string(d.kind()) << " " << d.name << " to " << path << "\n";
}

int cmd_validate(const Io& io, const Input& in, const std::string& format) {
  Document d = in.load(false);
  CheckReport r = validate(d);
  if (format == "json") {
    json j = {{"command", "validate"}, {"input", d.name},      {"kind", to_string(d.kind())},
              {"trunc", truncation(d)}, {"verdict", r ? "pass" : "fail"},
              {"witness", r.witness ? witness_json(*r.witness) : json(nullptr)}};
    io.out << j.dump(2) << "\n";
  } else {
    io.out << io.verdict(bool(r)) << " validate " << d.name << " (" << to_string(d.kind()) << trunc_text(d) << ")\n";
    if (!r) io.out << "  " << (r.witness ? r.witness->describe() : r.detail) << "\n";
  }
  return r ? pass : property_failure;
}

int cmd_check(const Io& io, const Input& in, const std::string& property, const std::string& format,
              const std::string& replay_file) {
  auto props = property_names();
  if (std::find(props.begin(), props.end(), property) == props.end())
    throw DocumentError("property", "unknown property " + property);
  Document d = in.load();
  if (!replay_file.empty()) {
    std::ifstream f(replay_file, std::ios::binary);
    if (!f) throw DocumentError(replay_file, "cannot open file");
    json j;
    try {
      j = json::parse(f);
    } catch (const json::parse_error& e) {
      throw DocumentError(replay_file, "syntax error at byte " + std::to_string(e.byte));
    }
    const json& wj = j.contains("witness") ? j["witness"] : j;
    if (wj.is_null()) throw DocumentError(replay_file, "the report carries no witness");
    Witness w = witness_from_json(wj);
    std::string why;
    const bool ok = replay(d, property, w, why);
    if (format == "json") {
      json out = {{"command", "replay"}, {"input", d.name}, {"property", property},
                  {"reproduced", ok},    {"reason", why},   {"witness", witness_json(w)}};
      io.out << out.dump(2) << "\n";
    } else {
      io.out << io.verdict(ok) << " replay " << property << " " << d.name << ": " << w.describe() << "\n";
      if (!ok) io.out << "  not reproduced: " << why << "\n";
    }
    return ok ? pass : property_failure;
  }
  CheckReport r = check_property(d, property);
  if (format == "json") {
    json j = {{"command", "check"},
              {"input", d.name},
              {"kind", to_string(d.kind())},
              {"property", property},
              {"trunc", truncation(d)},
              {"verdict", r ? "pass" : "fail"},
              {"witness", r.witness ? witness_json(*r.witness) : json(nullptr)}};
    io.out << j.dump(2) << "\n";
  } else {
    io.out << io.verdict(bool(r)) << " " << property << " " << d.name << " (" << to_string(d.kind()) << trunc_text(d)
           << ")\n";
    if (!r) io.out << "  " << (r.witness ? r.witness->describe() : r.detail) << "\n";
  }
  return r ? pass : property_failure;
}

int cmd_latch(const Io& io, const Input& in, std::optional<int> simplicial, std::optional<int> spectral,
              const std::string& out) {
  if (simplicial.has_value() == spectral.has_value())
    throw DocumentError("arguments", "give exactly one of --simplicial n or --spectral n");
  Document d = in.load();
  if (simplicial) {
    const int n = *simplicial;
    auto range = [&](int top) {
      if (n < 0 || n > top) throw DocumentError("--simplicial", "degree " + std::to_string(n) + " outside 0.." + std::to_string(top));
    };
    std::string name = d.name + " latching nu~_" + std::to_string(n);
    if (d.kind() == Kind::simplicial_spectrum) {
      const auto& x = std::get<SimplicialSpectrum>(d.value);
      range(x.trunc());
      emit(io, Document{name, simplicial_latching<Spectra>(x, n).nu}, out);
    } else if (d.kind() == Kind::sset) {
      // A simplicial pointed set, read as a simplicial object in pointed sets.
      const auto& x = std::get<SimplicialSet>(d.value);
      range(x.trunc());
      emit(io, Document{name, simplicial_latching<PointedSets>(x, n).nu}, out);
    } else {
      throw DocumentError("/kind", "--simplicial needs a simplicial-spectrum or sset");
    }
    return pass;
  }
  const int n = *spectral;
  if (d.kind() != Kind::spectrum) throw DocumentError("/kind", "--spectral needs a spectrum");
  const auto& x = std::get<SymSpectrum>(d.value);
  if (n < 0 || n > x.strunc())
    throw DocumentError("--spectral", "level " + std::to_string(n) + " outside 0.." + std::to_string(x.strunc()));
  emit(io, Document{d.name + " latching nu_" + std::to_string(n), SpectralLatching(x, n).nu_map()}, out);
  return pass;
}

void require_square(int K, int D) {
  if (K != D)
    throw DocumentError("/trunc", "realization needs K = D, got K=" + std::to_string(K) + " D=" + std::to_string(D));
}

int cmd_realize(const Io& io, const Input& in, const std::string& out) {
  Document d = in.load();
  if (d.kind() == Kind::simplicial_spectrum) {
    const auto& x = std::get<SimplicialSpectrum>(d.value);
    require_square(x.trunc(), x.at(0).dtrunc());
    emit(io, Document{"|" + d.name + "|", realize(x)}, out);
  } else if (d.kind() == Kind::simplicial_spectrum_map) {
    const auto& f = std::get<SimplicialSpectrumMap>(d.value);
    require_square(f.trunc(), f.dom().at(0).dtrunc());
    emit(io, Document{"|" + d.name + "|", realize_map(f)}, out);
  } else {
    throw DocumentError("/kind", "realize needs a simplicial-spectrum or simplicial-spectrum-map");
  }
  return pass;
}

int cmd_cofiber(const Io& io, const Input& in, const std::string& out) {
  Document d = in.load();
  if (d.kind() != Kind::simplicial_spectrum_map) throw DocumentError("/kind", "cofiber needs a simplicial-spectrum-map");
  auto z = pointwise_cofiber(std::get<SimplicialSpectrumMap>(d.value));
  emit(io, Document{"cofiber(" + d.name + ")", z.object}, out);
  return pass;
}

json summary_json(const harness::Summary& s) {
  json j = {{"suite", s.suite},       {"seed", s.seed},       {"strategy", s.strategy}, {"requested", s.requested},
            {"cases", s.cases},       {"passes", s.passes},   {"discards", s.discards}, {"starved", s.starved},
            {"starvation", s.starvation}, {"notes", s.notes}, {"verdict", s.ok() ? "pass" : "fail"}};
  if (s.counterexample) {
    const auto& c = *s.counterexample;
    j["counterexample"] = {{"case", c.case_index},
                           {"property", c.property},
                           {"report", c.report},
                           {"recipe", c.recipe},
                           {"document", c.document.empty() ? json(nullptr) : json::parse(c.document)}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

int cmd_selftest(const Io& io, std::vector<std::string> suites, std::uint64_t seed, int cases,
                 const std::string& strategy, const std::string& format) {
  harness::GenConfig cfg;
  cfg.seed = seed;
  if (!harness::parse_strategy(strategy, cfg.strategy)) throw DocumentError("--strategy", "unknown strategy " + strategy);
  auto known = harness::suite_names();
  if (suites.empty()) suites = known;
  for (const auto& s : suites)
    if (std::find(known.begin(), known.end(), s) == known.end()) throw DocumentError("--suite", "unknown suite " + s);
  json all = json::array();
  bool starved = false, failed = false;
  for (const auto& name : suites) {
    harness::Summary s = harness::run_suite(name, cfg, cases);
    starved = starved || s.starved;
    failed = failed || s.counterexample.has_value() || s.passes != s.cases;
    if (format == "json") {
      all.push_back(summary_json(s));
      continue;
    }
    io.out << io.verdict(s.ok()) << " suite " << s.suite << " seed=" << s.seed << " strategy=" << s.strategy << ": "
           << s.passes << "/" << s.cases << " cases, " << s.discards << " discards\n";
    for (const auto& n : s.notes) io.out << "  " << n << "\n";
    if (s.starved) io.out << "  generator starvation: " << s.starvation << "\n";
    if (s.counterexample)
      io.out << "  counterexample at case " << s.counterexample->case_index << " (" << s.counterexample->property
             << "): " << s.counterexample->report << "\n  recipe: " << s.counterexample->recipe << "\n";
  }
  if (format == "json") io.out << json{{"command", "selftest"}, {"suites", all}}.dump(2) << "\n";
  if (failed) return property_failure;
  return starved ? starvation : pass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
  Io io{out, err, color};
  CLI::App app{"Checks cofibrancy conditions for symmetric spectra and simplicial objects", "reedy-check"};
  app.require_subcommand(1);
  std::string format = "text";
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_input = [&](CLI::App* c, Input& in) {
    c->add_option("--builtin", in.builtin, "Built-in input: " + [] {
      std::string s;
      for (const auto& n : builtin_names()) s += (s.empty() ? "" : ", ") + n;
      return s;
    }());
  };

  Input vin;
  auto* validate_cmd = app.add_subcommand("validate", "Parse a document and check its structural invariants");
  validate_cmd->add_option("file", vin.file, "Input document");
  add_input(validate_cmd, vin);
  add_format(validate_cmd);

  Input cin_;
  std::vector<std::string> check_pos;
  std::string replay_file;
  auto* check_cmd = app.add_subcommand("check", "Evaluate a cofibration property");
  check_cmd->add_option("args", check_pos, "[file] property")->required()->expected(1, 2);
  add_input(check_cmd, cin_);
  add_format(check_cmd);
  check_cmd->add_option("--replay", replay_file, "Report whose witness is re-evaluated");

  Input lin;
  std::optional<int> simp, spec;
  std::string latch_out;
  auto* latch_cmd = app.add_subcommand("latch", "Latching map of a simplicial object or spectrum");
  latch_cmd->add_option("file", lin.file, "Input document");
  add_input(latch_cmd, lin);
  latch_cmd->add_option("--simplicial", simp, "Simplicial degree n");
  latch_cmd->add_option("--spectral", spec, "Spectral level n");
  latch_cmd->add_option("-o,--output", latch_out, "Output document (default: stdout)");

  Input rin;
  std::string realize_out;
  auto* realize_cmd = app.add_subcommand("realize", "Realization (diagonal) of a simplicial spectrum or map");
  realize_cmd->add_option("file", rin.file, "Input document");
  add_input(realize_cmd, rin);
  realize_cmd->add_option("-o,--output", realize_out, "Output document (default: stdout)");

  Input cofin;
  std::string cofiber_out;
  auto* cofiber_cmd = app.add_subcommand("cofiber", "Pointwise cofiber of a map of simplicial spectra");
  cofiber_cmd->add_option("file", cofin.file, "Input document");
  add_input(cofiber_cmd, cofin);
  cofiber_cmd->add_option("-o,--output", cofiber_out, "Output document (default: stdout)");

  std::vector<std::string> suites;
  std::uint64_t seed = 1;
  int cases = 0;
  std::string strategy = "structured-good";
  auto* self_cmd = app.add_subcommand("selftest", "Run the property suites");
  self_cmd->add_option("--suite", suites, "Suite: 3.2, 4.1, 4.2, 1.4, lemmas, unit, bisimplicial, oracle (default: all)");
  self_cmd->add_option("--seed", seed, "Seed");
  self_cmd->add_option("--cases", cases, "Cases per suite (default: the suite's size)");
  self_cmd->add_option("--strategy", strategy, "structured-good, rejection or adversarial");
  add_format(self_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return pass;
  } catch (const CLI::ParseError& e) {
    // Help for a subcommand arrives as CallForHelp from the subcommand too.
    if (e.get_exit_code() == 0) {
      out << app.help();
      return pass;
    }
    err << "error: " << e.what() << "\n";
    return input_error;
  }

  try {
    if (*validate_cmd) return cmd_validate(io, vin, format);
    if (*check_cmd) {
      std::string property = check_pos.back();
      if (check_pos.size() == 2) cin_.file = check_pos[0];
      return cmd_check(io, cin_, property, format, replay_file);
    }
    if (*latch_cmd) return cmd_latch(io, lin, simp, spec, latch_out);
    if (*realize_cmd) return cmd_realize(io, rin, realize_out);
    if (*cofiber_cmd) return cmd_cofiber(io, cofin, cofiber_out);
    if (*self_cmd) return cmd_selftest(io, suites, seed, cases, strategy, format);
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  return input_error;
}

}  // namespace reedy::cli
