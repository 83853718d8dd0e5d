#include "reedy/day_tensor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>

namespace reedy {

struct DayLevel::Data {
  std::vector<SymSpectrum> factors;
  int n = 0;
  int D = 0;
  std::vector<Summand> summands;
  std::map<std::pair<std::vector<int>, Perm>, std::size_t> index;
  std::vector<std::vector<std::vector<Index>>> radix;  // [dim][summand][factor]
  std::vector<std::vector<Index>> offset;             // [dim][summand], one past the end appended
  mutable std::mutex mu;
  mutable std::optional<SimplicialSet> object;
};

DayLevel::DayLevel(std::vector<SymSpectrum> factors, int n) {
  if (factors.empty()) throw std::invalid_argument("Day tensor of no factors");
  auto d = std::make_shared<Data>();
  d->D = factors[0].dtrunc();
  for (const auto& f : factors) {
    if (f.dtrunc() != d->D) throw std::invalid_argument("Day tensor factors have different truncations");
    if (n < 0 || n > f.strunc()) throw std::out_of_range("Day tensor level outside truncation");
  }
  d->factors = std::move(factors);
  d->n = n;
  const int k = static_cast<int>(d->factors.size());
  for (const auto& comp : compositions(n, k))
    for (auto& sh : shuffles(comp)) {
      d->index[{comp, sh.gamma}] = d->summands.size();
      d->summands.push_back({comp, std::move(sh.gamma)});
    }
  for (int dim = 0; dim <= d->D; ++dim) {
    d->radix.emplace_back();
    d->offset.emplace_back();
    Index total = 0;
    for (const auto& s : d->summands) {
      std::vector<Index> r;
      Index count = 1;
      for (int j = 0; j < k; ++j) {
        r.push_back(d->factors[j].level(s.blocks[j]).at(dim).size() - 1);
        count *= r.back();
      }
      d->radix.back().push_back(std::move(r));
      d->offset.back().push_back(total);
      total += count;
    }
    d->offset.back().push_back(total);
  }
  d_ = std::move(d);
}

int DayLevel::n() const { return d_->n; }
int DayLevel::dtrunc() const { return d_->D; }
const std::vector<SymSpectrum>& DayLevel::factors() const { return d_->factors; }
const std::vector<DayLevel::Summand>& DayLevel::summands() const { return d_->summands; }

std::size_t DayLevel::summand_index(const std::vector<int>& blocks, const Perm& gamma) const {
  auto it = d_->index.find({blocks, gamma});
  if (it == d_->index.end()) throw std::invalid_argument("no such Day summand");
  return it->second;
}

PointedSet DayLevel::at(int dim) const { return PointedSet(d_->offset.at(dim).back() + 1); }

Index DayLevel::encode(int dim, std::size_t s, std::span<const Index> parts) const {
  const auto& r = d_->radix[dim][s];
  Index e = 0;
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (parts[j] == 0) return 0;
    e = e * r[j] + (parts[j] - 1);
  }
  return d_->offset[dim][s] + e + 1;
}

std::size_t DayLevel::decode(int dim, Index e, std::vector<Index>& parts) const {
  const auto& off = d_->offset[dim];
  if (e == 0 || e > off.back()) throw std::out_of_range("decode: not a non-basepoint element");
  Index x = e - 1;
  std::size_t s = static_cast<std::size_t>(std::upper_bound(off.begin(), off.end(), x) - off.begin()) - 1;
  const auto& r = d_->radix[dim][s];
  parts.assign(r.size(), 0);
  Index rest = x - off[s];
  for (std::size_t j = r.size(); j-- > 0;) {
    parts[j] = 1 + rest % r[j];
    rest /= r[j];
  }
  return s;
}

PointedMap DayLevel::generator_at(int dim, int i) const {
  const int n = d_->n;
  const std::size_t k = d_->factors.size();
  struct Plan {
    std::size_t target;
    std::vector<PointedMap> acts;
  };
  std::vector<Plan> plans;
  Perm tau = transposition(n, i);
  for (const auto& s : d_->summands) {
    Normalized nz = normalize(compose_perm(tau, s.gamma), s.blocks);
    Plan p{summand_index(s.blocks, nz.gamma), {}};
    for (std::size_t j = 0; j < k; ++j) p.acts.push_back(d_->factors[j].act(s.blocks[j], nz.alphas[j]).component(dim));
    plans.push_back(std::move(p));
  }
  PointedSet obj = at(dim);
  std::vector<Index> parts;
  return PointedMap::tabulate(obj, obj, [&](Index e) {
    const Plan& p = plans[decode(dim, e, parts)];
    for (std::size_t j = 0; j < k; ++j) parts[j] = p.acts[j](parts[j]);
    return encode(dim, p.target, parts);
  });
}

PointedMap DayLevel::operator_at(int dim, int i, bool face) const {
  const int to = face ? dim - 1 : dim + 1;
  const std::size_t k = d_->factors.size();
  std::vector<Index> parts;
  return PointedMap::tabulate(at(dim), at(to), [&](Index e) {
    std::size_t s = decode(dim, e, parts);
    const auto& blocks = d_->summands[s].blocks;
    for (std::size_t j = 0; j < k; ++j) {
      const SimplicialSet& l = d_->factors[j].level(blocks[j]);
      parts[j] = (face ? l.face(dim, i) : l.degen(dim, i))(parts[j]);
    }
    return encode(to, s, parts);
  });
}

SimplicialSet DayLevel::object() const {
  std::lock_guard<std::mutex> lock(d_->mu);
  if (!d_->object) {
    std::vector<PointedSet> objs;
    for (int dim = 0; dim <= d_->D; ++dim) objs.push_back(at(dim));
    d_->object = SSets::from_objects(objs, [&](int dim, int i, bool face) { return operator_at(dim, i, face); });
  }
  return *d_->object;
}

std::vector<SimplicialMap> DayLevel::generators() const {
  SimplicialSet obj = object();
  std::vector<SimplicialMap> out;
  for (int i = 0; i + 1 < d_->n; ++i) {
    std::vector<PointedMap> comps;
    for (int dim = 0; dim <= d_->D; ++dim) comps.push_back(generator_at(dim, i));
    out.emplace_back(obj, obj, std::move(comps));
  }
  return out;
}

PointedMap day_map_at(const DayLevel& from, const DayLevel& to, const std::vector<SpectrumMap>& fs, int dim) {
  if (from.summands().size() != to.summands().size() || fs.size() != from.factors().size())
    throw std::invalid_argument("day_map: shapes differ");
  std::vector<Index> parts;
  return PointedMap::tabulate(from.at(dim), to.at(dim), [&](Index e) {
    std::size_t s = from.decode(dim, e, parts);
    const auto& blocks = from.summands()[s].blocks;
    for (std::size_t j = 0; j < fs.size(); ++j) parts[j] = fs[j].component(blocks[j]).component(dim)(parts[j]);
    return to.encode(dim, s, parts);
  });
}

namespace {

int least_strunc(const std::vector<SymSpectrum>& fs) {
  int N = fs.at(0).strunc();
  for (const auto& f : fs) N = std::min(N, f.strunc());
  return N;
}

// t ^ [gamma; e_1, ...] -> [1 (+) gamma; sigma(t ^ e_1), ...] at one dimension.
PointedMap day_sigma_at(const DayLevel& from, const DayLevel& to, int dim) {
  const SymSpectrum& a = from.factors()[0];
  const PointedSet c = circle(from.dtrunc()).at(dim);
  const PointedSet dom = smash(c, from.at(dim));
  std::vector<std::size_t> target;
  for (const auto& s : from.summands()) {
    std::vector<int> blocks = s.blocks;
    blocks[0] += 1;
    target.push_back(to.summand_index(blocks, block_sum({identity_perm(1), s.gamma})));
  }
  std::vector<Index> parts;
  return PointedMap::tabulate(dom, to.at(dim), [&](Index z) {
    auto [t, e] = smash_unpair(c, from.at(dim), z);
    std::size_t s = from.decode(dim, e, parts);
    int p = from.summands()[s].blocks[0];
    const PointedMap& sig = a.sigma(p).component(dim);
    parts[0] = sig(smash_index(c, a.level(p).at(dim), t, parts[0]));
    return to.encode(dim, target[s], parts);
  });
}

}  // namespace

SymSpectrum day_spectrum(const std::vector<SymSpectrum>& factors) {
  const int N = least_strunc(factors);
  std::vector<SymSpectrum> fs;
  for (const auto& f : factors) {
    if (f.strunc() == N) {
      fs.push_back(f);
      continue;
    }
    std::vector<SimplicialSet> levels(f.levels().begin(), f.levels().begin() + N + 1);
    std::vector<std::vector<SimplicialMap>> gens;
    std::vector<SimplicialMap> sig;
    for (int n = 0; n <= N; ++n) gens.push_back(f.generators(n));
    for (int n = 0; n < N; ++n) sig.push_back(f.sigma(n));
    fs.emplace_back(std::move(levels), std::move(gens), std::move(sig));
  }
  const int D = fs[0].dtrunc();
  std::vector<DayLevel> day;
  std::vector<SimplicialSet> levels;
  std::vector<std::vector<SimplicialMap>> gens;
  for (int n = 0; n <= N; ++n) {
    day.emplace_back(fs, n);
    levels.push_back(day.back().object());
    gens.push_back(day.back().generators());
  }
  std::vector<SimplicialMap> sigma;
  for (int n = 0; n < N; ++n) {
    std::vector<PointedMap> comps;
    for (int dim = 0; dim <= D; ++dim) comps.push_back(day_sigma_at(day[n], day[n + 1], dim));
    sigma.emplace_back(smash(circle(D), levels[n]), levels[n + 1], std::move(comps));
  }
  return SymSpectrum(std::move(levels), std::move(gens), std::move(sigma));
}

SpectrumMap day_spectrum_map(const std::vector<SpectrumMap>& fs) {
  std::vector<SymSpectrum> doms, cods;
  for (const auto& f : fs) {
    doms.push_back(f.dom());
    cods.push_back(f.cod());
  }
  return day_spectrum_map(fs, day_spectrum(doms), day_spectrum(cods));
}

SpectrumMap day_spectrum_map(const std::vector<SpectrumMap>& fs, const SymSpectrum& x, const SymSpectrum& y) {
  std::vector<SymSpectrum> doms, cods;
  for (const auto& f : fs) {
    doms.push_back(f.dom());
    cods.push_back(f.cod());
  }
  std::vector<SimplicialMap> comps;
  for (int n = 0; n <= x.strunc(); ++n) {
    DayLevel from(doms, n), to(cods, n);
    std::vector<PointedMap> c;
    for (int dim = 0; dim <= x.dtrunc(); ++dim) c.push_back(day_map_at(from, to, fs, dim));
    comps.emplace_back(x.level(n), y.level(n), std::move(c));
  }
  return SpectrumMap(x, y, std::move(comps));
}

SymSpectrum free_spectrum(const SymSpectrum& g) {
  return day_spectrum({sphere_spectrum(g.strunc(), g.dtrunc()), g});
}

SpectrumMap free_map(const SpectrumMap& f) {
  const SymSpectrum& g = f.dom();
  return day_spectrum_map({Spectra::identity(sphere_spectrum(g.strunc(), g.dtrunc())), f});
}

SpectrumMap free_map(const SpectrumMap& f, const SymSpectrum& dom, const SymSpectrum& cod) {
  const SymSpectrum& g = f.dom();
  return day_spectrum_map({Spectra::identity(sphere_spectrum(g.strunc(), g.dtrunc())), f}, dom, cod);
}

// ---------------------------------------------------------------------------

struct SmashOverS::Data {
  Data(SymSpectrum a_, SymSpectrum b_, DayLevel pair_, DayLevel triple_)
      : a(std::move(a_)), b(std::move(b_)), pair(std::move(pair_)), triple(std::move(triple_)) {}
  SymSpectrum a, b;
  DayLevel pair, triple;
  std::vector<Cocone<PointedSets>> quotient;
  mutable std::mutex mu;
  mutable std::optional<SimplicialSet> object;
};

namespace {

// chi in Sigma_{r+p}: sphere block (first r) moves behind A's block.
Perm chi(int r, int p) {
  Perm c(static_cast<std::size_t>(r + p));
  for (int i = 0; i < r; ++i) c[i] = i + p;
  for (int j = 0; j < p; ++j) c[r + j] = j;
  return c;
}

PointedMap action_map_at(const SymSpectrum& a, const SymSpectrum& b, const DayLevel& pair, const DayLevel& triple,
                         int dim, bool on_a) {
  const int D = triple.dtrunc();
  struct Plan {
    std::size_t target;
    PointedMap act_a, act_b, sig;
    PointedSet sphere_level, inner_level;
  };
  std::vector<Plan> plans;
  for (const auto& s : triple.summands()) {
    int p = s.blocks[0], r = s.blocks[1], q = s.blocks[2];
    if (on_a) {
      Normalized nz = normalize(s.gamma, {p + r, q});
      plans.push_back({pair.summand_index({p + r, q}, nz.gamma),
                       a.act(p + r, compose_perm(nz.alphas[0], chi(r, p))).component(dim),
                       b.act(q, nz.alphas[1]).component(dim), a.sigma_iter(p, r).component(dim),
                       sphere(r, D).at(dim), a.level(p).at(dim)});
    } else {
      Normalized nz = normalize(s.gamma, {p, r + q});
      plans.push_back({pair.summand_index({p, r + q}, nz.gamma), a.act(p, nz.alphas[0]).component(dim),
                       b.act(r + q, nz.alphas[1]).component(dim), b.sigma_iter(q, r).component(dim),
                       sphere(r, D).at(dim), b.level(q).at(dim)});
    }
  }
  std::vector<Index> parts;
  Index out[2];
  return PointedMap::tabulate(triple.at(dim), pair.at(dim), [&](Index e) {
    const Plan& pl = plans[triple.decode(dim, e, parts)];
    if (on_a) {
      out[0] = pl.act_a(pl.sig(smash_index(pl.sphere_level, pl.inner_level, parts[1], parts[0])));
      out[1] = pl.act_b(parts[2]);
    } else {
      out[0] = pl.act_a(parts[0]);
      out[1] = pl.act_b(pl.sig(smash_index(pl.sphere_level, pl.inner_level, parts[1], parts[2])));
    }
    return pair.encode(dim, pl.target, out);
  });
}

}  // namespace

SmashOverS::SmashOverS(const SymSpectrum& a, const SymSpectrum& b, int n) {
  if (a.dtrunc() != b.dtrunc()) throw std::invalid_argument("smash_over_s: truncations differ");
  const int N = std::min(a.strunc(), b.strunc());
  if (n < 0 || n > N) throw std::out_of_range("smash_over_s: level outside truncation");
  SymSpectrum s = sphere_spectrum(N, a.dtrunc());
  auto d = std::make_shared<Data>(a, b, DayLevel({a, b}, n), DayLevel({a, s, b}, n));
  for (int dim = 0; dim <= a.dtrunc(); ++dim)
    d->quotient.push_back(PointedSets::coequalizer(action_map_at(a, b, d->pair, d->triple, dim, true),
                                                   action_map_at(a, b, d->pair, d->triple, dim, false)));
  d_ = std::move(d);
}

const DayLevel& SmashOverS::pair() const { return d_->pair; }
const DayLevel& SmashOverS::triple() const { return d_->triple; }
PointedSet SmashOverS::at(int dim) const { return d_->quotient.at(dim).object; }
const PointedMap& SmashOverS::leg(int dim) const { return d_->quotient.at(dim).legs[0]; }
PointedMap SmashOverS::right_action_at(int dim) const {
  return action_map_at(d_->a, d_->b, d_->pair, d_->triple, dim, true);
}
PointedMap SmashOverS::left_action_at(int dim) const {
  return action_map_at(d_->a, d_->b, d_->pair, d_->triple, dim, false);
}

SimplicialSet SmashOverS::object() const {
  std::lock_guard<std::mutex> lock(d_->mu);
  if (!d_->object) {
    std::vector<PointedSet> objs;
    for (const auto& q : d_->quotient) objs.push_back(q.object);
    d_->object = SSets::from_objects(objs, [&](int dim, int i, bool face) {
      int to = face ? dim - 1 : dim + 1;
      return PointedSets::descend(leg(dim), compose(d_->pair.operator_at(dim, i, face), leg(to)));
    });
  }
  return *d_->object;
}

SimplicialMap SmashOverS::leg_map() const {
  std::vector<PointedMap> comps;
  for (const auto& q : d_->quotient) comps.push_back(q.legs[0]);
  return SimplicialMap(d_->pair.object(), object(), std::move(comps));
}

std::vector<SimplicialMap> SmashOverS::generators() const {
  SimplicialSet obj = object();
  std::vector<SimplicialMap> out;
  for (int i = 0; i + 1 < d_->pair.n(); ++i) {
    std::vector<PointedMap> comps;
    for (int dim = 0; dim <= d_->pair.dtrunc(); ++dim)
      comps.push_back(PointedSets::descend(leg(dim), compose(d_->pair.generator_at(dim, i), leg(dim))));
    out.emplace_back(obj, obj, std::move(comps));
  }
  return out;
}

PointedMap unit_at(const DayLevel& sx, int dim) {
  const SymSpectrum& x = sx.factors().at(1);
  const int n = sx.n(), D = sx.dtrunc();
  struct Plan {
    PointedMap act, sig;
    PointedSet sphere_level, inner_level;
  };
  std::vector<Plan> plans;
  for (const auto& s : sx.summands()) {
    int p = s.blocks[0], q = s.blocks[1];
    plans.push_back({x.act(n, s.gamma).component(dim), x.sigma_iter(q, p).component(dim), sphere(p, D).at(dim),
                     x.level(q).at(dim)});
  }
  std::vector<Index> parts;
  return PointedMap::tabulate(sx.at(dim), x.level(n).at(dim), [&](Index e) {
    const Plan& pl = plans[sx.decode(dim, e, parts)];
    return pl.act(pl.sig(smash_index(pl.sphere_level, pl.inner_level, parts[0], parts[1])));
  });
}

// ---------------------------------------------------------------------------

struct SpectralLatching::Data {
  SymSpectrum x;
  SmashOverS smash;
  std::vector<PointedMap> nu;
};

SpectralLatching::SpectralLatching(const SymSpectrum& x, int n) {
  if (n < 0 || n > x.strunc()) throw std::out_of_range("spectral latching: level outside truncation");
  SmashOverS sm(bar_s(x.strunc(), x.dtrunc()), x, n);
  std::vector<PointedMap> nu;
  for (int dim = 0; dim <= x.dtrunc(); ++dim) nu.push_back(PointedSets::descend(sm.leg(dim), unit_at(sm.pair(), dim)));
  d_ = std::make_shared<const Data>(Data{x, std::move(sm), std::move(nu)});
}

int SpectralLatching::n() const { return d_->smash.pair().n(); }
const SymSpectrum& SpectralLatching::spectrum() const { return d_->x; }
const SmashOverS& SpectralLatching::smash() const { return d_->smash; }
PointedSet SpectralLatching::at(int dim) const { return d_->smash.at(dim); }
const PointedMap& SpectralLatching::nu(int dim) const { return d_->nu.at(dim); }
SimplicialSet SpectralLatching::object() const { return d_->smash.object(); }
SimplicialMap SpectralLatching::nu_map() const { return SimplicialMap(object(), d_->x.level(n()), d_->nu); }
std::vector<SimplicialMap> SpectralLatching::generators() const { return d_->smash.generators(); }

PointedMap latching_map_at(const SpectralLatching& lx, const SpectralLatching& ly, const SpectrumMap& f, int dim) {
  const SymSpectrum& sb = lx.smash().pair().factors()[0];
  PointedMap day = day_map_at(lx.smash().pair(), ly.smash().pair(), {Spectra::identity(sb), f}, dim);
  return PointedSets::descend(lx.smash().leg(dim), compose(day, ly.smash().leg(dim)));
}

SimplicialMap latching_map(const SpectralLatching& lx, const SpectralLatching& ly, const SpectrumMap& f) {
  std::vector<PointedMap> comps;
  for (int dim = 0; dim <= lx.spectrum().dtrunc(); ++dim) comps.push_back(latching_map_at(lx, ly, f, dim));
  return SimplicialMap(lx.object(), ly.object(), std::move(comps));
}

UnitIso unit_iso_at(const SmashOverS& sx, int dim) {
  const DayLevel& pair = sx.pair();
  const SymSpectrum& x = pair.factors().at(1);
  const int n = pair.n();
  PointedMap forward = PointedSets::descend(sx.leg(dim), unit_at(pair, dim));
  std::size_t s = pair.summand_index({0, n}, identity_perm(n));
  PointedMap inverse = PointedMap::tabulate(x.level(n).at(dim), sx.at(dim), [&](Index e) {
    Index parts[2] = {1, e};
    return sx.leg(dim)(pair.encode(dim, s, parts));
  });
  return {std::move(forward), std::move(inverse)};
}

CheckReport check_unit_iso(const SymSpectrum& x, int n) {
  SmashOverS sx(sphere_spectrum(x.strunc(), x.dtrunc()), x, n);
  for (int dim = 0; dim <= x.dtrunc(); ++dim) {
    UnitIso u = unit_iso_at(sx, dim);
    if (auto r = PointedSets::compare(compose(u.forward, u.inverse), PointedMap::identity(sx.at(dim))); !r)
      return r.clause("inverse after unit").at("dim", dim).at("level", n);
    if (auto r = PointedSets::compare(compose(u.inverse, u.forward), PointedMap::identity(x.level(n).at(dim))); !r)
      return r.clause("unit after inverse").at("dim", dim).at("level", n);
  }
  return CheckReport::ok();
}

}  // namespace reedy
