#include "reedy/spectrum.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace reedy {

struct SymSpectrum::Data {
  std::vector<SimplicialSet> levels;
  std::vector<std::vector<SimplicialMap>> generators;
  std::vector<SimplicialMap> sigma;
  mutable std::mutex mu;
  mutable std::vector<std::map<std::uint64_t, SimplicialMap>> actions;
  mutable std::map<std::pair<int, int>, SimplicialMap> iterated;
};

namespace {

std::string lvl(int n) { return "level " + std::to_string(n); }

}  // namespace

SymSpectrum::SymSpectrum() : SymSpectrum(zero_spectrum(0, 0)) {}

SymSpectrum::SymSpectrum(std::vector<SimplicialSet> levels, std::vector<std::vector<SimplicialMap>> generators,
                         std::vector<SimplicialMap> sigma) {
  const std::size_t n = levels.size();
  if (n == 0) throw std::invalid_argument("spectrum needs level 0");
  const int D = levels[0].trunc();
  for (const auto& l : levels)
    if (l.trunc() != D) throw std::invalid_argument("spectrum levels have different truncations");
  if (generators.size() != n) throw std::invalid_argument("spectrum needs one generator list per level");
  if (sigma.size() != n - 1) throw std::invalid_argument("spectrum needs N structure maps");
  for (std::size_t m = 0; m < n; ++m) {
    std::size_t want = m >= 2 ? m - 1 : 0;
    if (generators[m].size() != want)
      throw std::invalid_argument(lvl(static_cast<int>(m)) + " needs " + std::to_string(want) + " generators");
    for (const auto& g : generators[m])
      if (!SSets::same(g.dom(), levels[m]) || !SSets::same(g.cod(), levels[m]))
        throw std::invalid_argument("generator at " + lvl(static_cast<int>(m)) + " is not an endomorphism");
  }
  const SimplicialSet s1 = circle(D);
  for (std::size_t m = 0; m + 1 < n; ++m)
    if (!SSets::same(sigma[m].dom(), smash(s1, levels[m])) || !SSets::same(sigma[m].cod(), levels[m + 1]))
      throw std::invalid_argument("structure map at " + lvl(static_cast<int>(m)) + " has wrong endpoints");
  auto d = std::make_shared<Data>();
  d->levels = std::move(levels);
  d->generators = std::move(generators);
  d->sigma = std::move(sigma);
  d->actions.resize(n);
  d_ = std::move(d);
}

int SymSpectrum::strunc() const { return static_cast<int>(d_->levels.size()) - 1; }
int SymSpectrum::dtrunc() const { return d_->levels[0].trunc(); }
const SimplicialSet& SymSpectrum::level(int n) const { return d_->levels.at(static_cast<std::size_t>(n)); }
const std::vector<SimplicialSet>& SymSpectrum::levels() const { return d_->levels; }
const SimplicialMap& SymSpectrum::generator(int n, int i) const {
  return d_->generators.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i));
}
const std::vector<SimplicialMap>& SymSpectrum::generators(int n) const {
  return d_->generators.at(static_cast<std::size_t>(n));
}
const SimplicialMap& SymSpectrum::sigma(int n) const { return d_->sigma.at(static_cast<std::size_t>(n)); }

SimplicialMap SymSpectrum::act_by_word(int n, const Perm& p, bool largest) const {
  if (static_cast<int>(p.size()) != n || !is_permutation(p)) throw std::invalid_argument("act: not a permutation of n letters");
  SimplicialMap m = SSets::identity(level(n));
  auto word = reduced_word(p, largest);
  // p = tau_{w0} . ... . tau_{w_last}: the last letter acts first.
  for (auto it = word.rbegin(); it != word.rend(); ++it) m = SSets::compose(m, generator(n, *it));
  return m;
}

SimplicialMap SymSpectrum::act(int n, const Perm& p) const {
  if (static_cast<int>(p.size()) != n || !is_permutation(p)) throw std::invalid_argument("act: not a permutation of n letters");
  std::uint64_t r = perm_rank(p);
  {
    std::lock_guard<std::mutex> lock(d_->mu);
    auto& memo = d_->actions.at(static_cast<std::size_t>(n));
    auto it = memo.find(r);
    if (it != memo.end()) return it->second;
  }
  SimplicialMap m;
  if (is_identity(p)) {
    m = SSets::identity(level(n));
  } else {
    // p = (p . tau_d) . tau_d for the first descent d.
    int d = 0;
    while (p[d] < p[d + 1]) ++d;
    Perm q = p;
    std::swap(q[d], q[d + 1]);
    m = SSets::compose(generator(n, d), act(n, q));
  }
  std::lock_guard<std::mutex> lock(d_->mu);
  return d_->actions[static_cast<std::size_t>(n)].emplace(r, std::move(m)).first->second;
}

SimplicialMap SymSpectrum::sigma_iter(int n, int p) const {
  if (p < 0 || n < 0 || n + p > strunc()) throw std::out_of_range("sigma_iter: level out of range");
  {
    std::lock_guard<std::mutex> lock(d_->mu);
    auto it = d_->iterated.find({n, p});
    if (it != d_->iterated.end()) return it->second;
  }
  const int D = dtrunc();
  SimplicialSet dom = smash(sphere(p, D), level(n));
  std::vector<PointedMap> comps;
  if (p == 0) {
    for (int k = 0; k <= D; ++k) {
      PointedMap id = PointedMap::identity(level(n).at(k));
      comps.emplace_back(dom.at(k), level(n).at(k), std::vector<Index>(id.table().begin(), id.table().end()));
    }
  } else {
    SimplicialMap inner = smash(SSets::identity(circle(D)), sigma_iter(n, p - 1));
    SimplicialMap whole = SSets::compose(inner, sigma(n + p - 1));
    for (int k = 0; k <= D; ++k) {
      const PointedMap& c = whole.component(k);
      comps.emplace_back(dom.at(k), c.cod(), std::vector<Index>(c.table().begin(), c.table().end()));
    }
  }
  SimplicialMap m(dom, level(n + p), std::move(comps));
  std::lock_guard<std::mutex> lock(d_->mu);
  return d_->iterated.emplace(std::make_pair(n, p), std::move(m)).first->second;
}

SpectrumMap::SpectrumMap() : d_(std::make_shared<const Data>()) {}

SpectrumMap::SpectrumMap(SymSpectrum dom, SymSpectrum cod, std::vector<SimplicialMap> components) {
  if (dom.strunc() != cod.strunc() || dom.dtrunc() != cod.dtrunc())
    throw std::invalid_argument("spectrum map between different truncations");
  if (components.size() != static_cast<std::size_t>(dom.strunc() + 1))
    throw std::invalid_argument("spectrum map needs one component per level");
  for (int n = 0; n <= dom.strunc(); ++n)
    if (!SSets::same(components[n].dom(), dom.level(n)) || !SSets::same(components[n].cod(), cod.level(n)))
      throw std::invalid_argument("spectrum map component at " + lvl(n) + " has wrong endpoints");
  d_ = std::make_shared<const Data>(Data{std::move(dom), std::move(cod), std::move(components)});
}

namespace {

// Circle coordinates of a non-basepoint element of sphere(n) at dimension k;
// coordinate 0 is the most significant digit.
std::vector<Index> sphere_digits(int n, Index c, Index e) {
  std::vector<Index> t(static_cast<std::size_t>(n));
  Index rest = e - 1;
  for (int j = n - 1; j >= 0; --j) {
    t[j] = 1 + rest % c;
    rest /= c;
  }
  return t;
}

Index sphere_pack(const std::vector<Index>& t, Index c) {
  Index e = 0;
  for (Index v : t) e = e * c + (v - 1);
  return e + 1;
}

}  // namespace

SimplicialMap sphere_action(int n, int D, const Perm& p) {
  if (static_cast<int>(p.size()) != n || !is_permutation(p)) throw std::invalid_argument("sphere_action: bad permutation");
  SimplicialSet s = sphere(n, D);
  std::vector<PointedMap> comps;
  for (int k = 0; k <= D; ++k) {
    const Index c = static_cast<Index>(k);  // non-basepoint circle elements at dimension k
    comps.push_back(PointedMap::tabulate(s.at(k), s.at(k), [&](Index e) -> Index {
      if (n == 0) return e;
      auto t = sphere_digits(n, c, e);
      std::vector<Index> u(t.size());
      for (int i = 0; i < n; ++i) u[p[i]] = t[i];
      return sphere_pack(u, c);
    }));
  }
  return SimplicialMap(s, s, std::move(comps));
}

namespace {

SymSpectrum sphere_like(int N, int D, bool bar) {
  if (N < 0) throw std::invalid_argument("spectral truncation must be nonnegative");
  if (N > D) throw std::invalid_argument("sphere spectra need N <= D");
  std::vector<SimplicialSet> levels;
  std::vector<std::vector<SimplicialMap>> gens;
  std::vector<SimplicialMap> sigma;
  for (int n = 0; n <= N; ++n) {
    levels.push_back(bar && n == 0 ? point_sset(D) : sphere(n, D));
    gens.emplace_back();
    for (int i = 0; i + 1 < n; ++i) gens.back().push_back(sphere_action(n, D, transposition(n, i)));
  }
  const SimplicialSet s1 = circle(D);
  for (int n = 0; n < N; ++n) {
    SimplicialSet dom = smash(s1, levels[n]);
    if (bar && n == 0) {
      sigma.push_back(SSets::zero_map(dom, levels[1]));
      continue;
    }
    std::vector<PointedMap> comps;
    for (int k = 0; k <= D; ++k) comps.push_back(PointedMap::identity(levels[n + 1].at(k)));
    // S^1 ^ S^n and S^(n+1) share their element numbering.
    sigma.emplace_back(dom, levels[n + 1], std::move(comps));
  }
  return SymSpectrum(std::move(levels), std::move(gens), std::move(sigma));
}

}  // namespace

SymSpectrum sphere_spectrum(int N, int D) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, SymSpectrum> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({N, D});
  if (it == cache.end()) it = cache.emplace(std::make_pair(N, D), sphere_like(N, D, false)).first;
  return it->second;
}

SymSpectrum bar_s(int N, int D) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, SymSpectrum> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({N, D});
  if (it == cache.end()) it = cache.emplace(std::make_pair(N, D), sphere_like(N, D, true)).first;
  return it->second;
}

SpectrumMap bar_s_inclusion(int N, int D) {
  SymSpectrum b = bar_s(N, D), s = sphere_spectrum(N, D);
  std::vector<SimplicialMap> comps;
  comps.push_back(SSets::zero_map(b.level(0), s.level(0)));
  for (int n = 1; n <= N; ++n) comps.push_back(SSets::identity(s.level(n)));
  return SpectrumMap(b, s, std::move(comps));
}

SymSpectrum zero_spectrum(int N, int D) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, SymSpectrum> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({N, D});
    if (it != cache.end()) return it->second;
  }
  if (N < 0) throw std::invalid_argument("spectral truncation must be nonnegative");
  SimplicialSet pt = point_sset(D);
  SimplicialMap id = SSets::identity(pt);
  std::vector<std::vector<SimplicialMap>> gens;
  for (int n = 0; n <= N; ++n) gens.emplace_back(static_cast<std::size_t>(n >= 2 ? n - 1 : 0), id);
  SimplicialSet dom = smash(circle(D), pt);
  std::vector<SimplicialMap> sigma(static_cast<std::size_t>(N), SSets::zero_map(dom, pt));
  SymSpectrum z(std::vector<SimplicialSet>(static_cast<std::size_t>(N + 1), pt), std::move(gens), std::move(sigma));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(N, D), z).first->second;
}

SymSpectrum concentrated(int N, int m, const SimplicialSet& level, std::vector<SimplicialMap> generators) {
  if (m < 0 || m > N) throw std::out_of_range("concentrated: level outside truncation");
  const int D = level.trunc();
  SymSpectrum z = zero_spectrum(N, D);
  std::vector<SimplicialSet> levels = z.levels();
  std::vector<std::vector<SimplicialMap>> gens;
  for (int n = 0; n <= N; ++n) gens.push_back(z.generators(n));
  levels[m] = level;
  gens[m] = std::move(generators);
  std::vector<SimplicialMap> sigma;
  for (int n = 0; n < N; ++n) sigma.push_back(SSets::zero_map(smash(circle(D), levels[n]), levels[n + 1]));
  return SymSpectrum(std::move(levels), std::move(gens), std::move(sigma));
}

SpectrumMap concentrated_map(const SymSpectrum& dom, const SymSpectrum& cod, int m, const SimplicialMap& fm) {
  std::vector<SimplicialMap> comps;
  for (int n = 0; n <= dom.strunc(); ++n)
    comps.push_back(n == m ? fm : SSets::zero_map(dom.level(n), cod.level(n)));
  return SpectrumMap(dom, cod, std::move(comps));
}

SymSpectrum smash(const SymSpectrum& x, const SimplicialSet& k) {
  std::vector<SimplicialSet> levels;
  std::vector<std::vector<SimplicialMap>> gens;
  std::vector<SimplicialMap> sigma;
  SimplicialMap idk = SSets::identity(k);
  for (int n = 0; n <= x.strunc(); ++n) {
    levels.push_back(smash(x.level(n), k));
    gens.emplace_back();
    for (const auto& g : x.generators(n)) gens.back().push_back(smash(g, idk));
  }
  for (int n = 0; n < x.strunc(); ++n) {
    SimplicialMap s = smash(x.sigma(n), idk);
    // (S^1 ^ X(n)) ^ K and S^1 ^ (X(n) ^ K) share their element numbering.
    sigma.emplace_back(smash(circle(k.trunc()), levels[n]), levels[n + 1], s.components());
  }
  return SymSpectrum(std::move(levels), std::move(gens), std::move(sigma));
}

SpectrumMap smash(const SpectrumMap& f, const SimplicialMap& g) {
  std::vector<SimplicialMap> comps;
  for (int n = 0; n <= f.dom().strunc(); ++n) comps.push_back(smash(f.component(n), g));
  return SpectrumMap(smash(f.dom(), g.dom()), smash(f.cod(), g.cod()), std::move(comps));
}

SpectrumMap Spectra::identity(const Object& x) {
  std::vector<SimplicialMap> comps;
  for (int n = 0; n <= x.strunc(); ++n) comps.push_back(SSets::identity(x.level(n)));
  return SpectrumMap(x, x, std::move(comps));
}

SpectrumMap Spectra::zero_map(const Object& x, const Object& y) {
  std::vector<SimplicialMap> comps;
  for (int n = 0; n <= x.strunc(); ++n) comps.push_back(SSets::zero_map(x.level(n), y.level(n)));
  return SpectrumMap(x, y, std::move(comps));
}

SpectrumMap Spectra::compose(const Map& f, const Map& g) {
  std::vector<SimplicialMap> comps;
  for (int n = 0; n <= f.dom().strunc(); ++n) comps.push_back(SSets::compose(f.component(n), g.component(n)));
  return SpectrumMap(f.dom(), g.cod(), std::move(comps));
}

bool Spectra::equal(const Map& f, const Map& g) {
  if (f.components().size() != g.components().size()) return false;
  for (std::size_t n = 0; n < f.components().size(); ++n)
    if (!SSets::equal(f.components()[n], g.components()[n])) return false;
  return true;
}

bool Spectra::same(const Object& x, const Object& y) {
  if (x.shares_storage_with(y)) return true;
  if (x.strunc() != y.strunc() || x.dtrunc() != y.dtrunc()) return false;
  for (int n = 0; n <= x.strunc(); ++n) {
    if (!SSets::same(x.level(n), y.level(n))) return false;
    for (std::size_t i = 0; i < x.generators(n).size(); ++i)
      if (!SSets::equal(x.generators(n)[i], y.generators(n)[i])) return false;
  }
  for (int n = 0; n < x.strunc(); ++n)
    if (!SSets::equal(x.sigma(n), y.sigma(n))) return false;
  return true;
}

Cocone<Spectra> Spectra::wedge(const std::vector<Object>& summands) {
  if (summands.empty()) throw std::invalid_argument("wedge of no spectra");
  const int N = summands[0].strunc(), D = summands[0].dtrunc();
  for (const auto& s : summands)
    if (s.strunc() != N || s.dtrunc() != D) throw std::invalid_argument("wedge: truncations differ");
  const SimplicialSet s1 = circle(D);
  const SimplicialMap id1 = SSets::identity(s1);
  std::vector<Cocone<SSets>> w;
  std::vector<SimplicialSet> levels;
  std::vector<std::vector<SimplicialMap>> gens;
  for (int n = 0; n <= N; ++n) {
    std::vector<SimplicialSet> parts;
    for (const auto& s : summands) parts.push_back(s.level(n));
    w.push_back(SSets::wedge(parts));
    levels.push_back(w.back().object);
    gens.emplace_back();
    for (int i = 0; i + 1 < n; ++i) {
      std::vector<SimplicialMap> maps;
      for (std::size_t j = 0; j < summands.size(); ++j)
        maps.push_back(SSets::compose(summands[j].generator(n, i), w[n].legs[j]));
      gens.back().push_back(w[n].factor(maps));
    }
  }
  std::vector<SimplicialMap> sigma;
  for (int n = 0; n < N; ++n) {
    std::vector<SimplicialSet> parts;
    for (const auto& s : summands) parts.push_back(smash(s1, s.level(n)));
    auto v = SSets::wedge(parts);
    std::vector<SimplicialMap> to_smash, to_next;
    for (std::size_t j = 0; j < summands.size(); ++j) {
      to_smash.push_back(smash(id1, w[n].legs[j]));
      to_next.push_back(SSets::compose(summands[j].sigma(n), w[n + 1].legs[j]));
    }
    sigma.push_back(SSets::descend(v.factor(to_smash), v.factor(to_next)));
  }
  SymSpectrum obj(std::move(levels), std::move(gens), std::move(sigma));
  Cocone<Spectra> out;
  out.object = obj;
  for (std::size_t j = 0; j < summands.size(); ++j) {
    std::vector<SimplicialMap> comps;
    for (int n = 0; n <= N; ++n) comps.push_back(w[n].legs[j]);
    out.legs.emplace_back(summands[j], obj, std::move(comps));
  }
  out.factor = [w, obj](std::span<const Map> maps) {
    if (maps.empty()) throw std::invalid_argument("copair of no spectrum maps");
    std::vector<SimplicialMap> comps;
    for (int n = 0; n <= obj.strunc(); ++n) {
      std::vector<SimplicialMap> at;
      for (const auto& m : maps) at.push_back(m.component(n));
      comps.push_back(w[n].factor(at));
    }
    return SpectrumMap(obj, maps[0].cod(), std::move(comps));
  };
  return out;
}

Cocone<Spectra> Spectra::coequalizer(const Map& f, const Map& g) {
  const SymSpectrum& y = f.cod();
  const int N = y.strunc(), D = y.dtrunc();
  const SimplicialMap id1 = SSets::identity(circle(D));
  std::vector<Cocone<SSets>> q;
  std::vector<SimplicialSet> levels;
  std::vector<std::vector<SimplicialMap>> gens;
  for (int n = 0; n <= N; ++n) {
    q.push_back(SSets::coequalizer(f.component(n), g.component(n)));
    levels.push_back(q.back().object);
    gens.emplace_back();
    for (int i = 0; i + 1 < n; ++i)
      gens.back().push_back(SSets::descend(q[n].legs[0], SSets::compose(y.generator(n, i), q[n].legs[0])));
  }
  std::vector<SimplicialMap> sigma;
  for (int n = 0; n < N; ++n)
    sigma.push_back(SSets::descend(smash(id1, q[n].legs[0]), SSets::compose(y.sigma(n), q[n + 1].legs[0])));
  SymSpectrum obj(std::move(levels), std::move(gens), std::move(sigma));
  std::vector<SimplicialMap> comps;
  for (int n = 0; n <= N; ++n) comps.push_back(q[n].legs[0]);
  Cocone<Spectra> out;
  out.object = obj;
  out.legs.emplace_back(y, obj, std::move(comps));
  SpectrumMap leg = out.legs[0];
  out.factor = [leg](std::span<const Map> maps) {
    if (maps.size() != 1) throw std::invalid_argument("coequalizer factor takes one map");
    return Spectra::descend(leg, maps[0]);
  };
  return out;
}

SpectrumMap Spectra::descend(const Map& epi, const Map& h) {
  std::vector<SimplicialMap> comps;
  for (int n = 0; n <= epi.dom().strunc(); ++n) comps.push_back(SSets::descend(epi.component(n), h.component(n)));
  return SpectrumMap(epi.cod(), h.cod(), std::move(comps));
}

CheckReport Spectra::is_mono(const Map& f) {
  for (int n = 0; n <= f.dom().strunc(); ++n) {
    auto r = SSets::is_mono(f.component(n));
    if (!r) return r.at(coordinate, n);
  }
  return CheckReport::ok();
}

CheckReport Spectra::is_epi(const Map& f) {
  for (int n = 0; n <= f.dom().strunc(); ++n) {
    auto r = SSets::is_epi(f.component(n));
    if (!r) return r.at(coordinate, n);
  }
  return CheckReport::ok();
}

CheckReport Spectra::compare(const Map& f, const Map& g) {
  for (int n = 0; n <= f.dom().strunc(); ++n) {
    auto r = SSets::compare(f.component(n), g.component(n));
    if (!r) return r.at(coordinate, n);
  }
  return CheckReport::ok();
}

namespace {

// The factor swap on S^1 ^ S^1 = sphere(2).
SimplicialMap swap_s2(int D) { return sphere_action(2, D, {1, 0}); }

}  // namespace

CheckReport Spectra::validate(const Object& x) {
  const int N = x.strunc(), D = x.dtrunc();
  const SimplicialMap id1 = SSets::identity(circle(D));
  auto named = [](CheckReport r, const std::string& c, int n) {
    r.clause(c);
    r.at(coordinate, n);
    return r;
  };
  for (int n = 0; n <= N; ++n) {
    const SimplicialSet& l = x.level(n);
    if (auto r = SSets::validate(l); !r) return named(r, "simplicial identities", n);
    const auto& g = x.generators(n);
    SimplicialMap id = SSets::identity(l);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (auto r = SSets::validate_map(g[i]); !r) return named(r, "tau_" + std::to_string(i) + " is simplicial", n);
      if (auto r = SSets::compare(SSets::compose(g[i], g[i]), id); !r)
        return named(r, "tau_" + std::to_string(i) + "^2 = 1", n);
      if (i + 1 < g.size()) {
        SimplicialMap b = SSets::compose(g[i], g[i + 1]);
        if (auto r = SSets::compare(SSets::compose(SSets::compose(b, b), b), id); !r)
          return named(r, "(tau_" + std::to_string(i) + " tau_" + std::to_string(i + 1) + ")^3 = 1", n);
      }
      for (std::size_t j = i + 2; j < g.size(); ++j)
        if (auto r = SSets::compare(SSets::compose(g[i], g[j]), SSets::compose(g[j], g[i])); !r)
          return named(r, "tau_" + std::to_string(i) + " tau_" + std::to_string(j) + " = tau_" + std::to_string(j) +
                              " tau_" + std::to_string(i), n);
    }
  }
  for (int n = 0; n < N; ++n) {
    const SimplicialMap& s = x.sigma(n);
    if (auto r = SSets::validate_map(s); !r) return named(r, "sigma is simplicial", n);
    for (int i = 0; i + 1 < n; ++i) {
      auto r = SSets::compare(SSets::compose(smash(id1, x.generator(n, i)), s),
                              SSets::compose(s, x.generator(n + 1, i + 1)));
      if (!r) return named(r, "sigma (1 ^ tau_" + std::to_string(i) + ") = tau_" + std::to_string(i + 1) + " sigma", n);
    }
  }
  for (int n = 0; n + 2 <= N; ++n) {
    SimplicialMap s2 = x.sigma_iter(n, 2);
    SimplicialMap sw = smash(swap_s2(D), SSets::identity(x.level(n)));
    auto r = SSets::compare(SSets::compose(sw, s2), SSets::compose(s2, x.generator(n + 2, 0)));
    if (!r) return named(r, "sigma^2 (swap ^ 1) = tau_0 sigma^2", n);
  }
  return CheckReport::ok();
}

CheckReport Spectra::validate_map(const Map& f) {
  const SymSpectrum& x = f.dom();
  const SymSpectrum& y = f.cod();
  const SimplicialMap id1 = SSets::identity(circle(x.dtrunc()));
  for (int n = 0; n <= x.strunc(); ++n) {
    if (auto r = SSets::validate_map(f.component(n)); !r) return r.at(coordinate, n);
    for (std::size_t i = 0; i < x.generators(n).size(); ++i) {
      auto r = SSets::compare(SSets::compose(x.generator(n, static_cast<int>(i)), f.component(n)),
                              SSets::compose(f.component(n), y.generator(n, static_cast<int>(i))));
      if (!r) return r.clause("f commutes with tau_" + std::to_string(i)).at(coordinate, n);
    }
  }
  for (int n = 0; n < x.strunc(); ++n) {
    auto r = SSets::compare(SSets::compose(x.sigma(n), f.component(n + 1)),
                            SSets::compose(smash(id1, f.component(n)), y.sigma(n)));
    if (!r) return r.clause("f commutes with sigma").at(coordinate, n);
  }
  return CheckReport::ok();
}

CheckReport check_full_equivariance(const SymSpectrum& x) {
  const int N = x.strunc(), D = x.dtrunc();
  for (int n = 0; n <= N; ++n)
    for (int p = 1; n + p <= N; ++p) {
      SimplicialMap s = x.sigma_iter(n, p);
      for (std::uint64_t a = 0; a < factorial(p); ++a)
        for (std::uint64_t b = 0; b < factorial(n); ++b) {
          Perm alpha = perm_unrank(p, a), beta = perm_unrank(n, b);
          SimplicialMap lhs = SSets::compose(smash(sphere_action(p, D, alpha), x.act(n, beta)), s);
          SimplicialMap rhs = SSets::compose(s, x.act(n + p, block_sum({alpha, beta})));
          auto r = SSets::compare(lhs, rhs);
          if (!r) return r.clause("sigma^" + std::to_string(p) + " is equivariant").at("level", n);
        }
    }
  return CheckReport::ok();
}

}  // namespace reedy
