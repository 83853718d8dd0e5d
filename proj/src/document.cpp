#include "reedy/document.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <type_traits>

namespace reedy {

using nlohmann::json;

namespace {

constexpr const char* kKindNames[] = {"pointed-set", "pointed-map",         "sset",
                                      "sset-map",    "spectrum",            "spectrum-map",
                                      "simplicial-spectrum", "simplicial-spectrum-map"};

// ---- writing ---------------------------------------------------------------

json table_json(const PointedMap& f) { return json(std::vector<Index>(f.table().begin(), f.table().end())); }

json pset_json(const PointedSet& p) {
  json j;
  j["size"] = p.size();
  j["labels"] = p.has_labels() ? json(*p.labels()) : json::array();
  return j;
}

json dims_json(const SimplicialMap& f) {
  json a = json::array();
  for (int l = 0; l <= f.dom().trunc(); ++l) a.push_back(table_json(f.component(l)));
  return a;
}

json sset_json(const SimplicialSet& x) {
  json j, levels = json::array(), faces = json::array(), degens = json::array();
  for (const auto& p : x.objects()) levels.push_back(p.size());
  for (int k = 0; k <= x.trunc(); ++k) {
    json row = json::array();
    for (int i = 0; k > 0 && i <= k; ++i) row.push_back(table_json(x.face(k, i)));
    faces.push_back(row);
  }
  for (int k = 0; k < x.trunc(); ++k) {
    json row = json::array();
    for (int i = 0; i <= k; ++i) row.push_back(table_json(x.degen(k, i)));
    degens.push_back(row);
  }
  j["levels"] = levels;
  j["faces"] = faces;
  j["degens"] = degens;
  return j;
}

json smap_json(const SimplicialMap& f) {
  json j;
  j["dom"] = sset_json(f.dom());
  j["cod"] = sset_json(f.cod());
  j["components"] = dims_json(f);
  return j;
}

json levels_json(const SpectrumMap& f) {
  json a = json::array();
  for (const auto& c : f.components()) a.push_back(dims_json(c));
  return a;
}

json spectrum_json(const SymSpectrum& x) {
  json j, levels = json::array(), actions = json::array(), sigma = json::array();
  for (int n = 0; n <= x.strunc(); ++n) {
    levels.push_back(sset_json(x.level(n)));
    json gens = json::array();
    for (const auto& g : x.generators(n)) gens.push_back(dims_json(g));
    actions.push_back(gens);
  }
  for (int n = 0; n < x.strunc(); ++n) sigma.push_back(dims_json(x.sigma(n)));
  j["levels"] = levels;
  j["actions"] = actions;
  j["sigma"] = sigma;
  return j;
}

json spmap_json(const SpectrumMap& f) {
  json j;
  j["dom"] = spectrum_json(f.dom());
  j["cod"] = spectrum_json(f.cod());
  j["components"] = levels_json(f);
  return j;
}

json ss_json(const SimplicialSpectrum& x) {
  json j, degrees = json::array(), faces = json::array(), degens = json::array();
  for (const auto& s : x.objects()) degrees.push_back(spectrum_json(s));
  for (int k = 0; k <= x.trunc(); ++k) {
    json row = json::array();
    for (int i = 0; k > 0 && i <= k; ++i) row.push_back(levels_json(x.face(k, i)));
    faces.push_back(row);
  }
  for (int k = 0; k < x.trunc(); ++k) {
    json row = json::array();
    for (int i = 0; i <= k; ++i) row.push_back(levels_json(x.degen(k, i)));
    degens.push_back(row);
  }
  j["degrees"] = degrees;
  j["faces"] = faces;
  j["degens"] = degens;
  return j;
}

json ssmap_json(const SimplicialSpectrumMap& f) {
  json j, comps = json::array();
  for (int k = 0; k <= f.trunc(); ++k) comps.push_back(levels_json(f.component(k)));
  j["dom"] = ss_json(f.dom());
  j["cod"] = ss_json(f.cod());
  j["components"] = comps;
  return j;
}

json trunc_json(const Document::Value& v) {
  json t = json::object();
  auto sset_d = [](const SimplicialSet& s) { return s.trunc(); };
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SimplicialSet>) t["D"] = sset_d(x);
        else if constexpr (std::is_same_v<T, SimplicialMap>) t["D"] = sset_d(x.dom());
        else if constexpr (std::is_same_v<T, SymSpectrum>) {
          t["N"] = x.strunc();
          t["D"] = x.dtrunc();
        } else if constexpr (std::is_same_v<T, SpectrumMap>) {
          t["N"] = x.dom().strunc();
          t["D"] = x.dom().dtrunc();
        } else if constexpr (std::is_same_v<T, SimplicialSpectrum>) {
          t["K"] = x.trunc();
          t["N"] = x.at(0).strunc();
          t["D"] = x.at(0).dtrunc();
        } else if constexpr (std::is_same_v<T, SimplicialSpectrumMap>) {
          t["K"] = x.trunc();
          t["N"] = x.dom().at(0).strunc();
          t["D"] = x.dom().at(0).dtrunc();
        }
      },
      v);
  return t;
}

// ---- reading ---------------------------------------------------------------

class Reader {
 public:
  explicit Reader(const json& root) : root_(root) {}

  [[noreturn]] static void fail(const std::string& path, const std::string& what) {
    throw DocumentError(path.empty() ? "/" : path, what);
  }

  static const json& field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
    return *it;
  }

  static const json& array(const json& j, const std::string& path, std::size_t want = SIZE_MAX) {
    if (!j.is_array()) fail(path, "expected an array");
    if (want != SIZE_MAX && j.size() != want)
      fail(path, "expected " + std::to_string(want) + " entries, found " + std::to_string(j.size()));
    return j;
  }

  static int integer(const json& j, const std::string& path, int lo = 0) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    auto v = j.get<long long>();
    if (v < lo || v > (1LL << 30)) fail(path, "integer out of range");
    return static_cast<int>(v);
  }

  // Constructors throw std::invalid_argument on shape errors.
  template <class F>
  static auto build(const std::string& path, F&& f) {
    try {
      return f();
    } catch (const DocumentError&) {
      throw;
    } catch (const std::exception& e) {
      fail(path, e.what());
    }
  }

  static PointedMap table(const json& j, const PointedSet& dom, const PointedSet& cod, const std::string& path) {
    array(j, path, dom.size());
    std::vector<Index> t;
    for (std::size_t i = 0; i < j.size(); ++i)
      t.push_back(static_cast<Index>(integer(j[i], path + "/" + std::to_string(i))));
    return build(path, [&] { return PointedMap(dom, cod, std::move(t)); });
  }

  static PointedSet pset(const json& j, const std::string& path) {
    int size = integer(field(j, "size", path), path + "/size", 1);
    auto it = j.find("labels");
    if (it == j.end() || (it->is_array() && it->empty())) return PointedSet(static_cast<Index>(size));
    array(*it, path + "/labels", static_cast<std::size_t>(size));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) fail(path + "/labels/" + std::to_string(i), "expected a string");
      labels.push_back((*it)[i].get<std::string>());
    }
    return PointedSet(static_cast<Index>(size), std::move(labels));
  }

  PointedMap pmap(const json& j, const std::string& path) {
    PointedSet dom = ref(j, "dom", path, Kind::pointed_set, [&](const json& p, const std::string& q) { return pset(p, q); });
    PointedSet cod = ref(j, "cod", path, Kind::pointed_set, [&](const json& p, const std::string& q) { return pset(p, q); });
    return table(field(j, "table", path), dom, cod, path + "/table");
  }

  static SimplicialSet sset(const json& j, const std::string& path) {
    const json& lv = array(field(j, "levels", path), path + "/levels");
    if (lv.empty()) fail(path + "/levels", "needs at least one level");
    std::vector<PointedSet> objs;
    for (std::size_t k = 0; k < lv.size(); ++k)
      objs.emplace_back(static_cast<Index>(integer(lv[k], path + "/levels/" + std::to_string(k), 1)));
    const std::size_t D = lv.size() - 1;
    const json& fj = array(field(j, "faces", path), path + "/faces", D + 1);
    const json& dj = array(field(j, "degens", path), path + "/degens", D);
    std::vector<std::vector<PointedMap>> faces(D + 1), degens(D);
    for (std::size_t k = 1; k <= D; ++k) {
      std::string p = path + "/faces/" + std::to_string(k);
      array(fj[k], p, k + 1);
      for (std::size_t i = 0; i <= k; ++i)
        faces[k].push_back(table(fj[k][i], objs[k], objs[k - 1], p + "/" + std::to_string(i)));
    }
    array(fj[0], path + "/faces/0", 0);
    for (std::size_t k = 0; k < D; ++k) {
      std::string p = path + "/degens/" + std::to_string(k);
      array(dj[k], p, k + 1);
      for (std::size_t i = 0; i <= k; ++i)
        degens[k].push_back(table(dj[k][i], objs[k], objs[k + 1], p + "/" + std::to_string(i)));
    }
    return build(path, [&] { return SimplicialSet(objs, std::move(faces), std::move(degens)); });
  }

  static SimplicialMap dims(const json& j, const SimplicialSet& dom, const SimplicialSet& cod, const std::string& path) {
    if (dom.trunc() != cod.trunc()) fail(path, "domain and codomain truncations differ");
    array(j, path, static_cast<std::size_t>(dom.trunc() + 1));
    std::vector<PointedMap> c;
    for (int l = 0; l <= dom.trunc(); ++l)
      c.push_back(table(j[static_cast<std::size_t>(l)], dom.at(l), cod.at(l), path + "/" + std::to_string(l)));
    return build(path, [&] { return SimplicialMap(dom, cod, std::move(c)); });
  }

  SimplicialMap smap(const json& j, const std::string& path) {
    auto rd = [&](const json& p, const std::string& q) { return sset(p, q); };
    SimplicialSet dom = ref(j, "dom", path, Kind::sset, rd);
    SimplicialSet cod = ref(j, "cod", path, Kind::sset, rd);
    return dims(field(j, "components", path), dom, cod, path + "/components");
  }

  static SymSpectrum spectrum(const json& j, const std::string& path) {
    const json& lv = array(field(j, "levels", path), path + "/levels");
    if (lv.empty()) fail(path + "/levels", "needs at least one level");
    std::vector<SimplicialSet> levels;
    for (std::size_t n = 0; n < lv.size(); ++n) levels.push_back(sset(lv[n], path + "/levels/" + std::to_string(n)));
    const std::size_t N = lv.size() - 1;
    const int D = levels[0].trunc();
    for (std::size_t n = 0; n <= N; ++n)
      if (levels[n].trunc() != D) fail(path + "/levels/" + std::to_string(n), "truncation differs from level 0");
    const json& aj = array(field(j, "actions", path), path + "/actions", N + 1);
    const json& sj = array(field(j, "sigma", path), path + "/sigma", N);
    std::vector<std::vector<SimplicialMap>> gens(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
      std::string p = path + "/actions/" + std::to_string(n);
      const std::size_t want = n >= 2 ? n - 1 : 0;
      array(aj[n], p, want);
      for (std::size_t i = 0; i < want; ++i)
        gens[n].push_back(dims(aj[n][i], levels[n], levels[n], p + "/" + std::to_string(i)));
    }
    std::vector<SimplicialMap> sigma;
    const SimplicialSet s1 = circle(D);
    for (std::size_t n = 0; n < N; ++n)
      sigma.push_back(dims(sj[n], smash(s1, levels[n]), levels[n + 1], path + "/sigma/" + std::to_string(n)));
    return build(path, [&] { return SymSpectrum(levels, std::move(gens), std::move(sigma)); });
  }

  static SpectrumMap levelmaps(const json& j, const SymSpectrum& dom, const SymSpectrum& cod, const std::string& path) {
    if (dom.strunc() != cod.strunc()) fail(path, "domain and codomain truncations differ");
    array(j, path, static_cast<std::size_t>(dom.strunc() + 1));
    std::vector<SimplicialMap> c;
    for (int n = 0; n <= dom.strunc(); ++n)
      c.push_back(dims(j[static_cast<std::size_t>(n)], dom.level(n), cod.level(n), path + "/" + std::to_string(n)));
    return build(path, [&] { return SpectrumMap(dom, cod, std::move(c)); });
  }

  SpectrumMap spmap(const json& j, const std::string& path) {
    auto rd = [&](const json& p, const std::string& q) { return spectrum(p, q); };
    SymSpectrum dom = ref(j, "dom", path, Kind::spectrum, rd);
    SymSpectrum cod = ref(j, "cod", path, Kind::spectrum, rd);
    return levelmaps(field(j, "components", path), dom, cod, path + "/components");
  }

  static SimplicialSpectrum ss(const json& j, const std::string& path) {
    const json& dg = array(field(j, "degrees", path), path + "/degrees");
    if (dg.empty()) fail(path + "/degrees", "needs at least one degree");
    std::vector<SymSpectrum> objs;
    for (std::size_t k = 0; k < dg.size(); ++k) objs.push_back(spectrum(dg[k], path + "/degrees/" + std::to_string(k)));
    const std::size_t K = dg.size() - 1;
    const json& fj = array(field(j, "faces", path), path + "/faces", K + 1);
    const json& dj = array(field(j, "degens", path), path + "/degens", K);
    array(fj[0], path + "/faces/0", 0);
    std::vector<std::vector<SpectrumMap>> faces(K + 1), degens(K);
    for (std::size_t k = 1; k <= K; ++k) {
      std::string p = path + "/faces/" + std::to_string(k);
      array(fj[k], p, k + 1);
      for (std::size_t i = 0; i <= k; ++i)
        faces[k].push_back(levelmaps(fj[k][i], objs[k], objs[k - 1], p + "/" + std::to_string(i)));
    }
    for (std::size_t k = 0; k < K; ++k) {
      std::string p = path + "/degens/" + std::to_string(k);
      array(dj[k], p, k + 1);
      for (std::size_t i = 0; i <= k; ++i)
        degens[k].push_back(levelmaps(dj[k][i], objs[k], objs[k + 1], p + "/" + std::to_string(i)));
    }
    return build(path, [&] { return SimplicialSpectrum(objs, std::move(faces), std::move(degens)); });
  }

  SimplicialSpectrumMap ssmap(const json& j, const std::string& path) {
    auto rd = [&](const json& p, const std::string& q) { return ss(p, q); };
    SimplicialSpectrum dom = ref(j, "dom", path, Kind::simplicial_spectrum, rd);
    SimplicialSpectrum cod = ref(j, "cod", path, Kind::simplicial_spectrum, rd);
    if (dom.trunc() != cod.trunc()) fail(path, "domain and codomain truncations differ");
    const json& cj = array(field(j, "components", path), path + "/components", static_cast<std::size_t>(dom.trunc() + 1));
    std::vector<SpectrumMap> c;
    for (int k = 0; k <= dom.trunc(); ++k)
      c.push_back(levelmaps(cj[static_cast<std::size_t>(k)], dom.at(k), cod.at(k), path + "/components/" + std::to_string(k)));
    return build(path, [&] { return SimplicialSpectrumMap(dom, cod, std::move(c)); });
  }

  Document::Value payload(Kind k, const json& j, const std::string& path) {
    switch (k) {
      case Kind::pointed_set: return pset(j, path);
      case Kind::pointed_map: return pmap(j, path);
      case Kind::sset: return sset(j, path);
      case Kind::sset_map: return smap(j, path);
      case Kind::spectrum: return spectrum(j, path);
      case Kind::spectrum_map: return spmap(j, path);
      case Kind::simplicial_spectrum: return ss(j, path);
      case Kind::simplicial_spectrum_map: return ssmap(j, path);
    }
    fail(path, "unknown kind");
  }

  static Kind kind_of(const json& j, const std::string& path) {
    const json& k = field(j, "kind", path);
    Kind out;
    if (!k.is_string() || !parse_kind(k.get<std::string>(), out)) fail(path + "/kind", "unknown document kind");
    return out;
  }

 private:
  // dom/cod: an inline payload or the name of an entry of "defs".
  template <class Read>
  std::invoke_result_t<Read&, const json&, const std::string&> ref(const json& j, const char* key,
                                                                   const std::string& path, Kind want, Read&& read) {
    const json& v = field(j, key, path);
    const std::string p = path + "/" + key;
    if (!v.is_string()) return read(v, p);
    const std::string name = v.get<std::string>();
    auto defs = root_.find("defs");
    if (defs == root_.end() || !defs->is_object() || !defs->contains(name))
      fail(p, "unresolved reference \"" + name + "\"");
    const json& def = (*defs)[name];
    const std::string dp = "/defs/" + name;
    if (kind_of(def, dp) != want) fail(p, "reference \"" + name + "\" has kind " + to_string(kind_of(def, dp)));
    if (!resolving_.insert(name).second) fail(p, "cyclic reference \"" + name + "\"");
    auto out = read(def, dp);
    resolving_.erase(name);
    return out;
  }

  const json& root_;
  std::set<std::string> resolving_;
};

}  // namespace

const char* to_string(Kind k) { return kKindNames[static_cast<int>(k)]; }

bool parse_kind(const std::string& s, Kind& out) {
  for (int i = 0; i < 8; ++i)
    if (s == kKindNames[i]) {
      out = static_cast<Kind>(i);
      return true;
    }
  return false;
}

json to_json(const Document& d) {
  json j = std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PointedSet>) return pset_json(x);
        else if constexpr (std::is_same_v<T, PointedMap>) {
          json m;
          m["dom"] = pset_json(x.dom());
          m["cod"] = pset_json(x.cod());
          m["table"] = table_json(x);
          return m;
        } else if constexpr (std::is_same_v<T, SimplicialSet>) return sset_json(x);
        else if constexpr (std::is_same_v<T, SimplicialMap>) return smap_json(x);
        else if constexpr (std::is_same_v<T, SymSpectrum>) return spectrum_json(x);
        else if constexpr (std::is_same_v<T, SpectrumMap>) return spmap_json(x);
        else if constexpr (std::is_same_v<T, SimplicialSpectrum>) return ss_json(x);
        else return ssmap_json(x);
      },
      d.value);
  j["kind"] = to_string(d.kind());
  j["name"] = d.name;
  j["trunc"] = trunc_json(d.value);
  return j;
}

Document from_json(const json& j) {
  Reader r(j);
  Kind k = Reader::kind_of(j, "");
  std::string name;
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) Reader::fail("/name", "expected a string");
    name = it->get<std::string>();
  }
  Document d{name, r.payload(k, j, "")};
  // A declared truncation must match the data.
  if (auto it = j.find("trunc"); it != j.end()) {
    json want = trunc_json(d.value);
    if (!it->is_object()) Reader::fail("/trunc", "expected an object");
    for (auto& [key, value] : it->items()) {
      if (!want.contains(key)) Reader::fail("/trunc/" + key, "not a truncation of a " + std::string(to_string(k)));
      if (value != want[key])
        Reader::fail("/trunc/" + key, "declared " + value.dump() + " but the data has " + want[key].dump());
    }
  }
  return d;
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw DocumentError("line " + std::to_string(line) + ", column " + std::to_string(col), "syntax error");
  }
  return from_json(j);
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

json truncation(const Document& d) { return trunc_json(d.value); }

std::string serialize(const Document& d) { return to_json(d).dump() + "\n"; }

void save_document(const Document& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DocumentError(path, "cannot write file");
  out << serialize(d);
}

CheckReport validate(const Document& d) {
  return std::visit(
      [](const auto& x) -> CheckReport {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PointedSet>) return PointedSets::validate(x);
        else if constexpr (std::is_same_v<T, PointedMap>) return PointedSets::validate_map(x);
        else if constexpr (std::is_same_v<T, SimplicialSet>) return SSets::validate(x);
        else if constexpr (std::is_same_v<T, SimplicialMap>) {
          if (auto r = SSets::validate(x.dom()); !r) return r.clause("domain");
          if (auto r = SSets::validate(x.cod()); !r) return r.clause("codomain");
          return SSets::validate_map(x);
        } else if constexpr (std::is_same_v<T, SymSpectrum>) return Spectra::validate(x);
        else if constexpr (std::is_same_v<T, SpectrumMap>) {
          if (auto r = Spectra::validate(x.dom()); !r) return r.clause("domain");
          if (auto r = Spectra::validate(x.cod()); !r) return r.clause("codomain");
          return Spectra::validate_map(x);
        } else if constexpr (std::is_same_v<T, SimplicialSpectrum>) return SimplicialSpectra::validate(x);
        else {
          if (auto r = SimplicialSpectra::validate(x.dom()); !r) return r.clause("domain");
          if (auto r = SimplicialSpectra::validate(x.cod()); !r) return r.clause("codomain");
          return SimplicialSpectra::validate_map(x);
        }
      },
      d.value);
}

}  // namespace reedy
