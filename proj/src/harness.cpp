#include "reedy/harness.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "reedy/document.hpp"

namespace reedy::harness {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::structured_good: return "structured-good";
    case Strategy::rejection: return "rejection";
    case Strategy::adversarial: return "adversarial";
  }
  return "?";
}

bool parse_strategy(const std::string& s, Strategy& out) {
  for (Strategy t : {Strategy::structured_good, Strategy::rejection, Strategy::adversarial})
    if (s == to_string(t)) {
      out = t;
      return true;
    }
  return false;
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

// Plain modulo: std distributions are not portable across standard libraries.
int Rng::below(int n) {
  if (n <= 0) throw std::invalid_argument("Rng::below needs a positive bound");
  return static_cast<int>(engine_() % static_cast<std::uint64_t>(n));
}

namespace {

constexpr int kRetries = 200;

Index max_level(const SimplicialSet& x) {
  Index m = 0;
  for (const auto& p : x.objects()) m = std::max(m, p.size());
  return m;
}

}  // namespace

// ---- small objects ----------------------------------------------------------

PointedSet gen_pointed(Rng& rng, const GenConfig& cfg) {
  return PointedSet(static_cast<Index>(rng.between(1, std::max(1, cfg.max_set))));
}

PointedMap gen_pointed_map(Rng& rng, const PointedSet& dom, const PointedSet& cod) {
  return PointedMap::tabulate(dom, cod, [&](Index) { return static_cast<Index>(rng.below(static_cast<int>(cod.size()))); });
}

SimplicialSet gen_sset(Rng& rng, int trunc, Index cap) {
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    const int cells = rng.between(1, 2);
    std::vector<SimplicialSet> parts;
    for (int c = 0; c < cells; ++c) {
      const int r = rng.below(20);
      const int d = r < 5 ? 0 : r < 17 ? 1 : 2;
      parts.push_back(standard_simplex(std::min(d, trunc), trunc));
    }
    SimplicialSet x = SSets::wedge(parts).object;
    const int idents = rng.below(3);
    for (int i = 0; i < idents; ++i) {
      const int a = rng.below(std::min(trunc, 1) + 1);
      const int size = static_cast<int>(x.at(a).size());
      if (size < 2) continue;
      Index e = static_cast<Index>(rng.between(1, size - 1));
      Index f = static_cast<Index>(rng.below(size));
      if (e == f) continue;
      SimplicialMap ye = yoneda_map(x, a, e);
      SimplicialMap yf = f == 0 ? SSets::zero_map(ye.dom(), x) : yoneda_map(x, a, f);
      x = SSets::coequalizer(ye, yf).object;
    }
    // The point is rejected: it makes every piece built on it vanish.
    if (max_level(x) <= cap && x.at(trunc).size() > 1) return x;
  }
  throw Starvation("gen_sset: no simplicial set within the size cap after " + std::to_string(kRetries) + " draws");
}

SimplicialSet gen_sset(Rng& rng, const GenConfig& cfg) {
  return gen_sset(rng, cfg.K, static_cast<Index>(cfg.max_set));
}

namespace {

// (Z [x] W)_k = const(Z_k) ^ W.
BisimplicialSet external_smash(const SimplicialSet& z, const SimplicialSet& w) {
  const int D = w.trunc();
  std::vector<SimplicialSet> objs;
  for (int k = 0; k <= z.trunc(); ++k) objs.push_back(smash(constant_sset(z.at(k), D), w));
  SimplicialMap idw = SSets::identity(w);
  return BisimplicialSets::from_objects(objs, [&](int k, int i, bool face) {
    return smash(constant_map(face ? z.face(k, i) : z.degen(k, i), D), idw);
  });
}

Index bicap(const BisimplicialSet& b) {
  Index m = 0;
  for (const auto& x : b.objects()) m = std::max(m, max_level(x));
  return m;
}

}  // namespace

BisimplicialMap bisimplicial_yoneda(const BisimplicialSet& b, int a, int bdim, Index x) {
  const int K = b.trunc(), D = b.at(0).trunc();
  BisimplicialSet dom = external_smash(standard_simplex(a, K), standard_simplex(bdim, D));
  if (x >= b.at(a).at(bdim).size()) throw std::out_of_range("bisimplicial_yoneda: element out of range");
  std::vector<SimplicialMap> comps;
  for (int k = 0; k <= K; ++k) {
    const SimplicialSet& src = dom.at(k);
    const PointedSet outer = standard_simplex(a, K).at(k);
    std::vector<PointedMap> dims;
    for (int l = 0; l <= D; ++l) {
      const PointedSet inner = standard_simplex(bdim, D).at(l);
      std::vector<Index> table(src.at(l).size(), 0);
      for (Index e = 1; e < src.at(l).size(); ++e) {
        auto [ai, bi] = smash_unpair(outer, inner, e);
        auto alpha = simplex_element(a, k, ai);
        auto beta = simplex_element(bdim, l, bi);
        Index y = operator_map<PointedSets>(b.at(a), beta, bdim)(x);
        table[e] = operator_map<SSets>(b, alpha, a).component(l)(y);
      }
      dims.emplace_back(src.at(l), b.at(k).at(l), std::move(table));
    }
    comps.emplace_back(src, b.at(k), std::move(dims));
  }
  return BisimplicialMap(dom, b, std::move(comps));
}

BisimplicialSet gen_bisimplicial(Rng& rng, int K, int D, Index cap) {
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    const int parts = rng.between(1, 2);
    std::vector<BisimplicialSet> summands;
    for (int p = 0; p < parts; ++p) summands.push_back(external_smash(gen_sset(rng, K, cap), gen_sset(rng, D, cap)));
    BisimplicialSet b = BisimplicialSets::wedge(summands).object;
    const int idents = rng.below(3);
    for (int i = 0; i < idents; ++i) {
      const int a = rng.below(std::min(K, 1) + 1), l = rng.below(std::min(D, 1) + 1);
      const int size = static_cast<int>(b.at(a).at(l).size());
      if (size < 2) continue;
      Index e = static_cast<Index>(rng.between(1, size - 1));
      Index f = static_cast<Index>(rng.below(size));
      if (e == f) continue;
      auto ye = bisimplicial_yoneda(b, a, l, e);
      auto yf = f == 0 ? BisimplicialSets::zero_map(ye.dom(), b) : bisimplicial_yoneda(b, a, l, f);
      b = BisimplicialSets::coequalizer(ye, yf).object;
    }
    if (bicap(b) <= cap && bicap(b) > 1) return b;
  }
  throw Starvation("gen_bisimplicial: no bisimplicial set within the size cap after " + std::to_string(kRetries) +
                   " draws");
}

BisimplicialSet gen_bisimplicial(Rng& rng, const GenConfig& cfg) {
  return gen_bisimplicial(rng, rng.between(1, std::min(cfg.K, 3)), rng.between(1, std::min(cfg.D, 3)),
                          static_cast<Index>(cfg.max_set));
}

// ---- spectra ----------------------------------------------------------------

const char* to_string(Omega o) {
  switch (o) {
    case Omega::point: return "point";
    case Omega::natural: return "natural";
    case Omega::sign: return "sign";
    case Omega::regular: return "regular";
    case Omega::sphere: return "sphere";
  }
  return "?";
}

namespace {

// A finite pointed Sigma_m-set: its size and the images of the transpositions.
struct FiniteAction {
  PointedSet set;
  std::vector<PointedMap> gens;
};

FiniteAction finite_action(Omega o, int m) {
  FiniteAction a;
  auto swap_pair = [](const PointedSet& s, Index x, Index y) {
    return PointedMap::tabulate(s, s, [&](Index e) { return e == x ? y : e == y ? x : e; });
  };
  switch (o) {
    case Omega::point:
    case Omega::sphere:
      a.set = PointedSet(2);
      for (int i = 0; i + 1 < m; ++i) a.gens.push_back(PointedMap::identity(a.set));
      break;
    case Omega::natural:
      a.set = PointedSet(static_cast<Index>(std::max(m, 1) + 1));
      for (int i = 0; i + 1 < m; ++i) a.gens.push_back(swap_pair(a.set, static_cast<Index>(i + 1), static_cast<Index>(i + 2)));
      break;
    case Omega::sign:
      a.set = PointedSet(3);
      for (int i = 0; i + 1 < m; ++i) a.gens.push_back(swap_pair(a.set, 1, 2));
      break;
    case Omega::regular: {
      const auto n = factorial(m);
      a.set = PointedSet(static_cast<Index>(n + 1));
      for (int i = 0; i + 1 < m; ++i) {
        Perm t = transposition(m, i);
        a.gens.push_back(PointedMap::tabulate(a.set, a.set, [&](Index e) {
          return static_cast<Index>(perm_rank(compose_perm(t, perm_unrank(m, e - 1))) + 1);
        }));
      }
      break;
    }
  }
  return a;
}

}  // namespace

EquivariantSet equivariant_factor(Omega o, int m, const SimplicialSet& w) {
  const int D = w.trunc();
  SimplicialMap idw = SSets::identity(w);
  EquivariantSet out;
  if (o == Omega::sphere) {
    out.object = smash(w, sphere(m, D));
    for (int i = 0; i + 1 < m; ++i) out.generators.push_back(smash(idw, sphere_action(m, D, transposition(m, i))));
    return out;
  }
  FiniteAction a = finite_action(o, m);
  out.object = smash(w, constant_sset(a.set, D));
  for (const auto& g : a.gens) out.generators.push_back(smash(idw, constant_map(g, D)));
  return out;
}

SpectrumMap spectrum_yoneda(const SymSpectrum& x, int m, int k, Index element) {
  const int N = x.strunc(), D = x.dtrunc();
  if (m < 0 || m > N || k < 0 || k > D) throw std::out_of_range("spectrum_yoneda: index out of range");
  if (element >= x.level(m).at(k).size()) throw std::out_of_range("spectrum_yoneda: element out of range");
  EquivariantSet e = equivariant_factor(Omega::regular, m, standard_simplex(k, D));
  SymSpectrum g = concentrated(N, m, e.object, e.generators);
  SymSpectrum f = free_spectrum(g);
  const SymSpectrum s = sphere_spectrum(N, D);
  const PointedSet reg(static_cast<Index>(factorial(m) + 1));
  std::vector<SimplicialMap> comps;
  for (int n = 0; n <= N; ++n) {
    DayLevel day({s, g}, n);
    std::vector<PointedMap> dims;
    for (int l = 0; l <= D; ++l) {
      const PointedSet src = f.level(n).at(l);
      const PointedSet simp = standard_simplex(k, D).at(l);
      std::vector<Index> parts;
      std::vector<Index> table(src.size(), 0);
      for (Index el = 1; el < src.size(); ++el) {
        const auto& sm = day.summands()[day.decode(l, el, parts)];
        if (sm.blocks[1] != m) continue;
        const int p = sm.blocks[0];
        auto [ai, pi] = smash_unpair(simp, reg, parts[1]);
        Index y = operator_map<PointedSets>(x.level(m), simplex_element(k, l, ai), k)(element);
        y = x.act(m, perm_unrank(m, pi - 1)).component(l)(y);
        const SimplicialMap si = x.sigma_iter(m, p);
        y = si.component(l)(smash_index(sphere(p, D).at(l), x.level(m).at(l), parts[0], y));
        table[el] = x.act(n, sm.gamma).component(l)(y);
      }
      dims.emplace_back(src, x.level(n).at(l), std::move(table));
    }
    comps.emplace_back(f.level(n), x.level(n), std::move(dims));
  }
  return SpectrumMap(f, x, std::move(comps));
}

namespace {

Omega pick_omega(Rng& rng, int m, Index cap) {
  for (;;) {
    const int r = rng.below(20);
    Omega o = r < 10 ? Omega::point : r < 13 ? Omega::natural : r < 15 ? Omega::sign : r < 17 ? Omega::regular : Omega::sphere;
    if (o == Omega::regular && factorial(m) + 1 > cap) continue;
    if (o == Omega::natural && static_cast<Index>(m + 1) > cap) continue;
    return o;
  }
}

SimplicialSet pick_w(Rng& rng, int D) {
  const int r = rng.below(10);
  if (r < 5) return sphere(0, D);
  if (r < 8) return circle(D);
  return standard_simplex(1, D);
}

}  // namespace

SymSpectrum gen_spectrum(Rng& rng, const GenConfig& cfg) {
  const int N = cfg.N, D = cfg.D;
  const Index cap = static_cast<Index>(cfg.max_set);
  const int parts = rng.between(1, 2);
  std::vector<SymSpectrum> summands;
  for (int p = 0; p < parts; ++p) {
    const int r = rng.below(10);
    const int m = rng.below(N + 1);
    if (r == 0) {
      summands.push_back(sphere_spectrum(N, D));
    } else if (r == 1) {
      summands.push_back(bar_s(N, D));
    } else if (r < 6) {
      auto e = equivariant_factor(pick_omega(rng, m, cap), m, pick_w(rng, D));
      summands.push_back(free_spectrum(concentrated(N, m, e.object, e.generators)));
    } else if (r < 8) {
      auto e = equivariant_factor(pick_omega(rng, m, cap), m, pick_w(rng, D));
      summands.push_back(concentrated(N, m, e.object, e.generators));
    } else {
      summands.push_back(smash(sphere_spectrum(N, D), pick_w(rng, D)));
    }
  }
  SymSpectrum x = summands.size() == 1 ? summands[0] : Spectra::wedge(summands).object;
  const int quotients = rng.below(3);
  for (int q = 0; q < quotients; ++q) {
    const int m = rng.below(N + 1), k = rng.below(2);
    const int size = static_cast<int>(x.level(m).at(k).size());
    if (size < 2) continue;
    Index e = static_cast<Index>(rng.between(1, size - 1));
    Index f = static_cast<Index>(rng.below(size));
    if (e == f) continue;
    SpectrumMap ye = spectrum_yoneda(x, m, k, e);
    SpectrumMap yf = f == 0 ? Spectra::zero_map(ye.dom(), x) : spectrum_yoneda(x, m, k, f);
    x = Spectra::coequalizer(ye, yf).object;
  }
  return x;
}

// ---- simplicial spectra -----------------------------------------------------

const char* to_string(PieceKind k) {
  switch (k) {
    case PieceKind::free: return "free";
    case PieceKind::concentrated: return "concentrated";
    case PieceKind::bar: return "bar";
  }
  return "?";
}

std::string Piece::describe() const {
  std::string z, zp;
  for (int k = 0; k <= sub.trunc(); ++k) {
    z += (k ? "," : "") + std::to_string(sub.cod().at(k).size());
    zp += (k ? "," : "") + std::to_string(sub.dom().at(k).size());
  }
  std::string ws;
  for (int l = 0; l <= w.trunc(); ++l) ws += (l ? "," : "") + std::to_string(w.at(l).size());
  return std::string(to_string(kind)) + " m=" + std::to_string(m) + " omega=" + to_string(omega) + " W=[" + ws +
         "] Z=[" + z + "] Z'=[" + zp + "]";
}

std::string Recipe::describe() const {
  std::string s = "K=" + std::to_string(K) + " N=" + std::to_string(N) + " D=" + std::to_string(D);
  for (const auto& p : pieces) s += "; " + p.describe();
  return s;
}

namespace {

struct PieceSide {
  EquivariantSet e;
  std::vector<SymSpectrum> g;  // concentrated part, per degree (free/concentrated)
  std::vector<SymSpectrum> x;  // the piece, per degree
};

SimplicialSet g_level(const EquivariantSet& e, const PointedSet& zk, int D) {
  return smash(constant_sset(zk, D), e.object);
}

PieceSide build_side(const Piece& p, const SimplicialSet& z, const Recipe& r, const EquivariantSet& e) {
  PieceSide side;
  side.e = e;
  for (int k = 0; k <= r.K; ++k) {
    if (p.kind == PieceKind::bar) {
      side.x.push_back(smash(bar_s(r.N, r.D), smash(constant_sset(z.at(k), r.D), p.w)));
      continue;
    }
    SimplicialSet lvl = g_level(e, z.at(k), r.D);
    SimplicialMap idc = SSets::identity(constant_sset(z.at(k), r.D));
    std::vector<SimplicialMap> gens;
    for (const auto& t : e.generators) gens.push_back(smash(idc, t));
    SymSpectrum g = concentrated(r.N, p.m, lvl, gens);
    side.g.push_back(g);
    side.x.push_back(p.kind == PieceKind::free ? free_spectrum(g) : g);
  }
  return side;
}

// The map of pieces induced by phi: P -> P' between degree objects.
SpectrumMap piece_map(const Piece& p, const Recipe& r, const PieceSide& from, int kf, const PieceSide& to, int kt,
                      const PointedMap& phi) {
  if (p.kind == PieceKind::bar) {
    SpectrumMap m = smash(Spectra::identity(bar_s(r.N, r.D)), smash(constant_map(phi, r.D), SSets::identity(p.w)));
    return SpectrumMap(from.x[kf], to.x[kt], m.components());
  }
  SimplicialMap lv = smash(constant_map(phi, r.D), SSets::identity(from.e.object));
  SpectrumMap gm = concentrated_map(from.g[kf], to.g[kt], p.m, lv);
  if (p.kind == PieceKind::concentrated) return gm;
  return free_map(gm, from.x[kf], to.x[kt]);
}

struct Built {
  SimplicialSpectrum x, y;
  std::vector<SpectrumMap> f;
};

SimplicialSpectrum assemble(const Recipe& r, const std::vector<PieceSide>& sides, const std::vector<SimplicialSet>& zs,
                            std::vector<Cocone<Spectra>>& wedges) {
  wedges.clear();
  std::vector<SymSpectrum> objs;
  for (int k = 0; k <= r.K; ++k) {
    std::vector<SymSpectrum> parts;
    for (const auto& s : sides) parts.push_back(s.x[k]);
    wedges.push_back(Spectra::wedge(parts));
    objs.push_back(wedges.back().object);
  }
  return SimplicialSpectra::from_objects(objs, [&](int k, int i, bool face) {
    const int kt = face ? k - 1 : k + 1;
    std::vector<SpectrumMap> legs;
    for (std::size_t j = 0; j < sides.size(); ++j) {
      const PointedMap& phi = face ? zs[j].face(k, i) : zs[j].degen(k, i);
      legs.push_back(Spectra::compose(piece_map(r.pieces[j], r, sides[j], k, sides[j], kt, phi), wedges[kt].legs[j]));
    }
    return wedges[k].factor(legs);
  });
}

Built build(const Recipe& r, bool want_x, bool want_y) {
  if (r.pieces.empty()) throw std::invalid_argument("recipe has no pieces");
  std::vector<PieceSide> xs, ys;
  std::vector<SimplicialSet> zx, zy;
  for (const auto& p : r.pieces) {
    EquivariantSet e = p.kind == PieceKind::bar ? EquivariantSet{} : equivariant_factor(p.omega, p.m, p.w);
    zy.push_back(p.sub.cod());
    zx.push_back(p.sub.dom());
    if (want_y) ys.push_back(build_side(p, p.sub.cod(), r, e));
    if (want_x) xs.push_back(build_side(p, p.sub.dom(), r, e));
  }
  Built b;
  std::vector<Cocone<Spectra>> wx, wy;
  if (want_x) b.x = assemble(r, xs, zx, wx);
  if (want_y) b.y = assemble(r, ys, zy, wy);
  if (want_x && want_y)
    for (int k = 0; k <= r.K; ++k) {
      std::vector<SpectrumMap> legs;
      for (std::size_t j = 0; j < r.pieces.size(); ++j)
        legs.push_back(Spectra::compose(
            piece_map(r.pieces[j], r, xs[j], k, ys[j], k, r.pieces[j].sub.component(k)), wy[k].legs[j]));
      b.f.push_back(wx[k].factor(legs));
    }
  return b;
}

SimplicialMap identity_sub(const SimplicialSet& z) { return SSets::identity(z); }

// A simplicial subset of z: the point, z itself, or generated by random simplices.
SimplicialMap random_sub(Rng& rng, const SimplicialSet& z) {
  const int r = rng.below(4);
  if (r == 0) return generated_subobject(z, {});
  if (r == 1) return identity_sub(z);
  std::vector<std::pair<int, Index>> gens;
  const int count = rng.between(1, 2);
  for (int i = 0; i < count; ++i) {
    const int k = rng.below(z.trunc() + 1);
    if (z.at(k).size() > 1) gens.emplace_back(k, static_cast<Index>(rng.between(1, static_cast<int>(z.at(k).size()) - 1)));
  }
  return generated_subobject(z, gens);
}

Piece random_piece(Rng& rng, const GenConfig& cfg, PieceKind kind, bool positive) {
  Piece p;
  p.kind = kind;
  p.m = positive ? rng.between(1, cfg.N) : rng.below(cfg.N + 1);
  if (kind == PieceKind::bar) p.m = 0;
  p.omega = pick_omega(rng, p.m, static_cast<Index>(cfg.max_set));
  if (p.omega == Omega::sphere && p.m > cfg.D) p.omega = Omega::point;
  p.w = pick_w(rng, cfg.D);
  p.sub = identity_sub(gen_sset(rng, cfg.K, static_cast<Index>(cfg.max_cells)));
  return p;
}

Recipe empty_recipe(const GenConfig& cfg) {
  Recipe r;
  r.K = cfg.K;
  r.N = cfg.N;
  r.D = cfg.D;
  return r;
}

}  // namespace

SimplicialSpectrum build_object(const Recipe& r, bool source_side) {
  Built b = build(r, source_side, !source_side);
  return source_side ? b.x : b.y;
}

SimplicialSpectrumMap build_map(const Recipe& r) {
  Built b = build(r, true, true);
  return SimplicialSpectrumMap(b.x, b.y, b.f);
}

Recipe gen_good_recipe(Rng& rng, const GenConfig& cfg, bool positive) {
  Recipe r = empty_recipe(cfg);
  const int pieces = rng.chance(1, 5) ? 3 : rng.between(1, 2);
  for (int i = 0; i < pieces; ++i) r.pieces.push_back(random_piece(rng, cfg, PieceKind::free, positive));
  return r;
}

SimplicialSpectrum gen_good_simplicial_spectrum(Rng& rng, const GenConfig& cfg, bool positive) {
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    SimplicialSpectrum x = build_object(gen_good_recipe(rng, cfg, positive));
    if (positive ? is_positive_good(x) : is_good(x)) return x;
  }
  throw Starvation("gen_good_simplicial_spectrum: structured generator produced no good object");
}

const char* suite_name(Theorem t) {
  switch (t) {
    case Theorem::goodness: return "3.2";
    case Theorem::levelwise_map: return "4.1";
    case Theorem::flat_map: return "4.2";
    case Theorem::composite: return "1.4";
  }
  return "?";
}

bool parse_theorem(const std::string& s, Theorem& out) {
  for (Theorem t : {Theorem::goodness, Theorem::levelwise_map, Theorem::flat_map, Theorem::composite})
    if (s == suite_name(t)) {
      out = t;
      return true;
    }
  return false;
}

namespace {

// Candidate recipe for one draw; may violate the hypotheses under the
// rejection and adversarial strategies.
Recipe draw_recipe(Rng& rng, const GenConfig& cfg, Theorem t, bool positive, bool force_bad) {
  Recipe r = empty_recipe(cfg);
  const int pieces = rng.chance(1, 5) ? 3 : rng.between(1, 2);
  for (int i = 0; i < pieces; ++i) {
    PieceKind kind = PieceKind::free;
    bool pos = positive;
    if (cfg.strategy == Strategy::rejection) {
      kind = rng.chance(2, 5) ? PieceKind::concentrated : PieceKind::free;
      pos = positive && !rng.chance(1, 4);
    } else if (cfg.strategy == Strategy::adversarial) {
      const int c = rng.below(10);
      kind = c < 2 ? PieceKind::bar : c < 4 ? PieceKind::concentrated : PieceKind::free;
      pos = positive && !rng.chance(1, 4);
    }
    r.pieces.push_back(random_piece(rng, cfg, kind, pos));
  }
  if (force_bad) {
    Piece p = random_piece(rng, cfg, PieceKind::bar, false);
    p.w = circle(cfg.D);
    r.pieces.push_back(p);
  }
  if (t != Theorem::goodness)
    for (auto& p : r.pieces) {
      // Positive flat maps are isomorphisms at level 0.
      bool keep = positive && p.m == 0;
      if (cfg.strategy != Strategy::structured_good && rng.chance(1, 4)) keep = false;
      if (!keep) p.sub = random_sub(rng, p.sub.cod());
    }
  // Levelwise theorem: a non-flat summand carried by the identity.
  if (t == Theorem::levelwise_map && rng.chance(1, 3)) {
    Piece p = random_piece(rng, cfg, PieceKind::concentrated, false);
    p.m = rng.below(cfg.N);
    if (p.omega == Omega::sphere && p.m > cfg.D) p.omega = Omega::point;
    r.pieces.push_back(p);
  }
  return r;
}

}  // namespace

CheckReport check_hypotheses(const SimplicialSpectrumMap& f, Theorem t, bool positive) {
  const Model flat = positive ? Model::positive_flat : Model::flat;
  switch (t) {
    case Theorem::goodness: {
      auto r = positive ? is_positive_good(f.cod()) : is_good(f.cod());
      return r ? r : r.clause(positive ? "X is positive-good" : "X is good");
    }
    case Theorem::levelwise_map: {
      if (auto r = is_pointwise_cofibration(f, flat); !r) return r.clause("f is a pointwise flat cofibration");
      if (auto r = is_reedy_cofibrant(f.cod(), Model::levelwise); !r) return r.clause("Y is Reedy levelwise-cofibrant");
      return CheckReport::ok();
    }
    case Theorem::flat_map: {
      if (auto r = is_pointwise_cofibration(f, flat); !r) return r.clause("f is a pointwise flat cofibration");
      if (auto r = is_reedy_cofibrant(f.dom(), Model::flat); !r) return r.clause("X is Reedy flat-cofibrant");
      if (auto r = is_reedy_cofibrant(f.cod(), Model::flat); !r) return r.clause("Y is Reedy flat-cofibrant");
      return CheckReport::ok();
    }
    case Theorem::composite: {
      for (const auto* x : {&f.dom(), &f.cod()}) {
        auto r = is_good(*x);
        if (r && positive)
          for (int k = 0; k <= x->trunc() && r; ++k) {
            r = is_cofibrant(x->at(k), Model::positive_flat);
            if (!r) r.at("degree", k);
          }
        if (!r) return r.clause(x == &f.dom() ? "hypotheses on X" : "hypotheses on Y");
      }
      if (auto r = is_pointwise_cofibration(f, flat); !r) return r.clause("f is a pointwise flat cofibration");
      return CheckReport::ok();
    }
  }
  return CheckReport::ok();
}

CheckReport check_conclusion(const SimplicialSpectrumMap& f, Theorem t, bool positive) {
  const bool square = f.trunc() == f.dom().at(0).dtrunc();
  switch (t) {
    case Theorem::goodness: {
      if (auto r = is_reedy_cofibrant(f.cod(), Model::flat); !r) return r.clause("X is Reedy flat-cofibrant");
      if (positive)
        if (auto r = is_reedy_cofibrant(f.cod(), Model::positive_flat); !r)
          return r.clause("X is Reedy positive flat-cofibrant");
      return CheckReport::ok();
    }
    case Theorem::levelwise_map: {
      if (auto r = is_reedy_cofibration(f, Model::levelwise); !r) return r.clause("f is a Reedy levelwise cofibration");
      if (positive)
        if (auto r = is_reedy_cofibration(f, Model::positive_levelwise); !r)
          return r.clause("f is a Reedy positive levelwise cofibration");
      if (square) {
        const Model m = positive ? Model::positive_levelwise : Model::levelwise;
        if (auto r = check_cofibration(realize_map(f), m); !r) return r.clause("|f| is a levelwise cofibration");
      }
      return CheckReport::ok();
    }
    case Theorem::flat_map:
    case Theorem::composite: {
      if (auto r = is_reedy_cofibration(f, Model::flat); !r) return r.clause("f is a Reedy flat cofibration");
      if (positive)
        if (auto r = is_reedy_cofibration(f, Model::positive_flat); !r)
          return r.clause("f is a Reedy positive flat cofibration");
      if (square || t == Theorem::composite) {
        const Model m = positive ? Model::positive_flat : Model::flat;
        if (auto r = check_cofibration(realize_map(f), m); !r) return r.clause("|f| is a flat cofibration");
      }
      return CheckReport::ok();
    }
  }
  return CheckReport::ok();
}

Instance gen_thm_hypothesis_instance(Rng& rng, const GenConfig& cfg, Theorem t, bool positive, int& discards) {
  int rejected = 0;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
      const bool bad = cfg.strategy == Strategy::adversarial && attempt == 0 && rng.chance(1, 10);
      Recipe r = draw_recipe(rng, cfg, t, positive, bad);
      SimplicialSpectrumMap f = t == Theorem::goodness ? zero_source(build_object(r)) : build_map(r);
      if (check_hypotheses(f, t, positive)) return Instance{std::move(r), positive, std::move(f)};
      ++discards;
      ++rejected;
      if (attempt >= 20 && rejected * 100 > 95 * (attempt + 1))
        throw Starvation(std::string("suite ") + suite_name(t) + ": discard rate above 95% after " +
                         std::to_string(attempt + 1) + " draws");
    }
  throw Starvation(std::string("suite ") + suite_name(t) + ": no instance after " + std::to_string(kRetries) + " draws");
}

// ---- oracles ----------------------------------------------------------------

PointedMap oracle_latching_sets(const SimplicialSet& z, int n) {
  if (n < 0 || n > z.trunc()) throw std::out_of_range("oracle_latching_sets: degree outside truncation");
  std::vector<char> in = degeneracy_union(z, n);
  std::vector<Index> members;
  for (Index e = 0; e < in.size(); ++e)
    if (in[e] || e == 0) members.push_back(e);
  PointedSet img(static_cast<Index>(members.size()));
  return PointedMap(img, z.at(n), members);
}

CheckReport check_oracle_agreement(const SimplicialSet& z, int n) {
  auto lat = simplicial_latching<PointedSets>(z, n);
  if (auto r = PointedSets::is_mono(lat.nu); !r) return r.clause("nu~ is a monomorphism").at("degree", n);
  PointedMap oracle = oracle_latching_sets(z, n);
  std::vector<char> via_nu(z.at(n).size(), 0), via_oracle(z.at(n).size(), 0);
  for (Index e = 0; e < lat.nu.dom().size(); ++e) via_nu[lat.nu(e)] = 1;
  for (Index e = 0; e < oracle.dom().size(); ++e) via_oracle[oracle(e)] = 1;
  for (Index e = 0; e < via_nu.size(); ++e)
    if (via_nu[e] != via_oracle[e]) {
      Witness w;
      w.kind = Witness::Kind::identity;
      w.first = e;
      w.second = via_nu[e];
      w.image = via_oracle[e];
      w.clause = "image of nu~ equals the union of degeneracy images";
      w.location = {{"degree", n}};
      return CheckReport::fail(w);
    }
  return CheckReport::ok();
}

CheckReport check_mediating_mono(const PointedMap& f1, const PointedMap& f2) {
  Pullback pb = pullback(f1, f2);
  auto po = pushout<PointedSets>(pb.to_first, pb.to_second);
  PointedMap maps[2] = {f1, f2};
  return PointedSets::is_mono(po.factor(maps)).clause("mediating map of a cospan of monomorphisms");
}

std::vector<PointedMap> all_monos(const PointedSet& a, const PointedSet& b) {
  std::vector<PointedMap> out;
  if (a.size() > b.size()) return out;
  std::vector<Index> table(a.size(), 0);
  std::vector<char> used(b.size(), 0);
  auto rec = [&](auto& self, Index i) -> void {
    if (i == a.size()) {
      out.emplace_back(a, b, table);
      return;
    }
    for (Index v = 1; v < b.size(); ++v)
      if (!used[v]) {
        used[v] = 1;
        table[i] = v;
        self(self, i + 1);
        used[v] = 0;
      }
  };
  rec(rec, 1);
  return out;
}

// ---- suites -----------------------------------------------------------------

std::vector<std::string> suite_names() { return {"3.2", "4.1", "4.2", "1.4", "lemmas", "unit", "bisimplicial", "oracle"}; }

int default_cases(const std::string& suite) {
  if (suite == "3.2" || suite == "bisimplicial" || suite == "oracle") return 200;
  if (suite == "4.1" || suite == "4.2" || suite == "1.4") return 100;
  if (suite == "unit") return 50;
  if (suite == "lemmas") return 20;
  throw std::invalid_argument("unknown suite: " + suite);
}

namespace {

std::string document_of(const SimplicialSpectrumMap& f, Theorem t) {
  if (t == Theorem::goodness) return serialize(Document{"counterexample", f.cod()});
  return serialize(Document{"counterexample", f});
}

bool is_degenerate(const SimplicialSet& z, int k, Index x) {
  for (int i = 0; k > 0 && i < k; ++i) {
    const PointedMap& s = z.degen(k - 1, i);
    for (Index e = 1; e < s.dom().size(); ++e)
      if (s(e) == x) return true;
  }
  return false;
}

// The piece with the non-degenerate simplex x of its base removed, together
// with every simplex having x as an iterated face.
std::optional<Piece> drop_simplex(const Piece& p, int k, Index x) {
  const SimplicialSet& z = p.sub.cod();
  std::vector<std::pair<int, Index>> keep;
  for (int j = 0; j <= z.trunc(); ++j)
    for (Index y = 1; y < z.at(j).size(); ++y) {
      if (j < k) {
        keep.emplace_back(j, y);
        continue;
      }
      const PointedMap c = generated_subobject(z, {{j, y}}).component(k);
      bool hits = false;
      for (Index e = 1; e < c.dom().size(); ++e) hits = hits || c(e) == x;
      if (!hits) keep.emplace_back(j, y);
    }
  SimplicialMap inc = generated_subobject(z, keep);
  const SimplicialSet& z2 = inc.dom();
  bool trivial = true;
  for (int j = 0; j <= z2.trunc(); ++j) trivial = trivial && z2.at(j).size() == 1;
  if (trivial) return std::nullopt;
  // The old subset intersected with the smaller base.
  std::vector<std::pair<int, Index>> gens;
  for (int j = 0; j <= z2.trunc(); ++j) {
    std::vector<char> in_sub(z.at(j).size(), 0);
    const PointedMap& s = p.sub.component(j);
    for (Index e = 0; e < s.dom().size(); ++e) in_sub[s(e)] = 1;
    const PointedMap& i = inc.component(j);
    for (Index e = 1; e < i.dom().size(); ++e)
      if (in_sub[i(e)]) gens.emplace_back(j, e);
  }
  Piece q = p;
  q.sub = generated_subobject(z2, gens);
  return q;
}

}  // namespace

Recipe shrink_recipe(const Recipe& r, const std::function<bool(const Recipe&)>& fails) {
  Recipe cur = r;
  bool progress = true;
  while (progress && cur.pieces.size() > 1) {
    progress = false;
    for (std::size_t j = 0; j < cur.pieces.size() && !progress; ++j) {
      Recipe cand = cur;
      cand.pieces.erase(cand.pieces.begin() + static_cast<std::ptrdiff_t>(j));
      if (fails(cand)) {
        cur = std::move(cand);
        progress = true;
      }
    }
  }
  progress = true;
  while (progress) {
    progress = false;
    for (std::size_t j = 0; j < cur.pieces.size() && !progress; ++j) {
      const SimplicialSet& z = cur.pieces[j].sub.cod();
      for (int k = z.trunc(); k >= 0 && !progress; --k)
        for (Index x = 1; x < z.at(k).size() && !progress; ++x) {
          if (is_degenerate(z, k, x)) continue;
          auto q = drop_simplex(cur.pieces[j], k, x);
          if (!q) continue;
          Recipe cand = cur;
          cand.pieces[j] = std::move(*q);
          if (fails(cand)) {
            cur = std::move(cand);
            progress = true;
          }
        }
    }
  }
  return cur;
}

namespace {

SimplicialSpectrumMap instance_map(const Recipe& r, Theorem t) {
  return t == Theorem::goodness ? zero_source(build_object(r)) : build_map(r);
}

Recipe shrink(const Recipe& r, Theorem t, bool positive) {
  return shrink_recipe(r, [&](const Recipe& c) {
    SimplicialSpectrumMap f = instance_map(c, t);
    return check_hypotheses(f, t, positive) && !check_conclusion(f, t, positive);
  });
}

void record_failure(Summary& s, int index, const std::string& property, const CheckReport& r,
                    const std::string& recipe = {}, const std::string& doc = {}) {
  if (s.counterexample) return;
  Counterexample c;
  c.case_index = index;
  c.property = property;
  c.report = r.witness ? r.witness->describe() : r.detail;
  c.recipe = recipe;
  c.document = doc;
  s.counterexample = std::move(c);
}

void run_theorem(Summary& s, Theorem t, const GenConfig& cfg, int cases) {
  GenConfig c = cfg;
  // Realization needs square truncation.
  if (t == Theorem::composite && c.D != c.K) {
    c.D = c.K;
    s.notes.push_back("D set to K = " + std::to_string(c.K) + " for realization");
  }
  int positives = 0;
  for (int i = 0; i < cases; ++i) {
    Rng rng(c.seed, static_cast<std::uint64_t>(i));
    const bool positive = i % 2 == 1;
    Instance inst;
    try {
      inst = gen_thm_hypothesis_instance(rng, c, t, positive, s.discards);
    } catch (const Starvation& e) {
      s.starved = true;
      s.starvation = e.what();
      return;
    }
    ++s.cases;
    positives += positive;
    auto r = check_conclusion(inst.map, t, positive);
    if (r) {
      ++s.passes;
      continue;
    }
    Recipe small = shrink(inst.recipe, t, positive);
    SimplicialSpectrumMap f = instance_map(small, t);
    record_failure(s, i, std::string("suite ") + suite_name(t) + " conclusion", r, small.describe(), document_of(f, t));
  }
  s.notes.push_back(std::to_string(positives) + " positive instances");
}

void run_lemmas(Summary& s, const GenConfig& cfg, int cases) {
  // Cospans of monomorphisms, exhaustively.
  int cospans = 0;
  for (Index d = 1; d <= 4; ++d)
    for (Index b = 1; b <= d; ++b)
      for (Index c = 1; c <= d; ++c) {
        PointedSet D(d), B(b), C(c);
        for (const auto& f1 : all_monos(C, D))
          for (const auto& f2 : all_monos(B, D)) {
            ++cospans;
            ++s.cases;
            auto r = check_mediating_mono(f1, f2);
            if (r) ++s.passes;
            else record_failure(s, cospans - 1, "mediating map is mono", r);
          }
      }
  s.notes.push_back(std::to_string(cospans) + " cospans of monomorphisms (sizes <= 4)");
  // Face sections and the factorization of the flat argument on generated objects.
  int sections = 0, factorizations = 0;
  for (int i = 0; i < cases; ++i) {
    Rng rng(cfg.seed, static_cast<std::uint64_t>(i));
    SimplicialSet z = gen_sset(rng, cfg.K, static_cast<Index>(cfg.max_cells));
    ++s.cases;
    ++sections;
    if (auto r = check_face_sections(z); r) ++s.passes;
    else record_failure(s, i, "face-section property", r, {}, serialize(Document{"counterexample", z}));
    SimplicialSpectrum x;
    try {
      x = gen_good_simplicial_spectrum(rng, cfg, false);
    } catch (const Starvation& e) {
      s.starved = true;
      s.starvation = e.what();
      return;
    }
    for (int n = 1; n <= x.trunc(); ++n)
      for (int lv = 0; lv <= x.at(0).strunc(); ++lv)
        for (int dim = 0; dim <= x.at(0).dtrunc(); ++dim) {
          FlatArgument a = flat_argument(x, n, lv, dim);
          ++s.cases;
          ++factorizations;
          CheckReport r = PointedSets::compare(a.f, compose(a.f_double_prime, a.f_prime));
          if (r) r = PointedSets::is_mono(a.f_prime).clause("F' is a monomorphism");
          if (r) r = PointedSets::is_epi(a.g).clause("G is surjective");
          else r.clause("F = F' F''");
          if (r) ++s.passes;
          else {
            r.at("dim", dim).at("level", lv).at("degree", n);
            record_failure(s, i, "corner-map factorization", r, {}, serialize(Document{"counterexample", x}));
          }
        }
  }
  s.notes.push_back(std::to_string(sections) + " face-section checks");
  s.notes.push_back(std::to_string(factorizations) + " factorization checks");
}

void run_unit(Summary& s, const GenConfig& cfg, int cases) {
  int implications = 0;
  for (int i = 0; i < cases; ++i) {
    Rng rng(cfg.seed, static_cast<std::uint64_t>(i));
    SymSpectrum x = gen_spectrum(rng, cfg);
    ++s.cases;
    CheckReport r = Spectra::validate(x);
    if (!r) r.clause("generated spectrum is valid");
    for (int n = 0; n <= x.strunc() && r; ++n) r = check_unit_iso(x, n);
    if (r) {
      // Flat implies levelwise, on the same corpus.
      if (is_cofibrant(x, Model::flat)) {
        ++implications;
        r = is_cofibrant(x, Model::levelwise);
        if (!r) r.clause("flat-cofibrant implies levelwise-cofibrant");
      }
    }
    if (r) ++s.passes;
    else record_failure(s, i, "unit isomorphism", r, {}, serialize(Document{"counterexample", x}));
  }
  s.notes.push_back(std::to_string(implications) + " flat-cofibrant spectra also levelwise-cofibrant");
}

void run_bisimplicial(Summary& s, const GenConfig& cfg, int cases) {
  GenConfig c = cfg;
  c.max_set = std::min(c.max_set, 4);
  for (int i = 0; i < cases; ++i) {
    Rng rng(c.seed, static_cast<std::uint64_t>(i));
    BisimplicialSet b = gen_bisimplicial(rng, c);
    ++s.cases;
    CheckReport r = BisimplicialSets::validate(b);
    for (int n = 0; n <= b.trunc() && r; ++n) {
      auto lat = simplicial_latching<SSets>(b, n);
      r = SSets::is_mono(lat.nu);
      if (!r) r.clause("nu~ is a monomorphism").at("degree", n);
    }
    // Slice by inner dimension: the same latching agrees with the oracle.
    for (int l = 0; l <= b.at(0).trunc() && r; ++l) {
      std::vector<PointedSet> objs;
      for (int k = 0; k <= b.trunc(); ++k) objs.push_back(b.at(k).at(l));
      SimplicialSet slice = SSets::from_objects(objs, [&](int k, int i2, bool face) {
        return face ? b.face(k, i2).component(l) : b.degen(k, i2).component(l);
      });
      for (int n = 0; n <= b.trunc() && r; ++n) {
        r = check_oracle_agreement(slice, n);
        if (!r) r.at("dim", l);
      }
    }
    if (r) ++s.passes;
    else record_failure(s, i, "bisimplicial Reedy cofibrancy", r);
  }
}

void run_oracle(Summary& s, const GenConfig& cfg, int cases) {
  for (int i = 0; i < cases; ++i) {
    Rng rng(cfg.seed, static_cast<std::uint64_t>(i));
    SimplicialSet z = gen_sset(rng, std::min(cfg.K, 3), static_cast<Index>(cfg.max_set));
    ++s.cases;
    CheckReport r = SSets::validate(z);
    for (int n = 0; n <= z.trunc() && r; ++n) r = check_oracle_agreement(z, n);
    if (r) ++s.passes;
    else record_failure(s, i, "oracle agreement", r, {}, serialize(Document{"counterexample", z}));
  }
}

}  // namespace

Summary run_suite(const std::string& suite, const GenConfig& cfg, int cases) {
  if (cases <= 0) cases = default_cases(suite);
  Summary s;
  s.suite = suite;
  s.seed = cfg.seed;
  s.strategy = to_string(cfg.strategy);
  s.requested = cases;
  Theorem t;
  if (parse_theorem(suite, t)) run_theorem(s, t, cfg, cases);
  else if (suite == "lemmas") run_lemmas(s, cfg, cases);
  else if (suite == "unit") run_unit(s, cfg, cases);
  else if (suite == "bisimplicial") run_bisimplicial(s, cfg, cases);
  else if (suite == "oracle") run_oracle(s, cfg, cases);
  else throw std::invalid_argument("unknown suite: " + suite);
  return s;
}

// ---- built-in corpus --------------------------------------------------------

SimplicialSpectrum good_demo() {
  GenConfig cfg;
  Recipe r = empty_recipe(cfg);
  Piece a;
  a.kind = PieceKind::free;
  a.m = 1;
  a.omega = Omega::point;
  a.w = circle(cfg.D);
  a.sub = identity_sub(circle(cfg.K));
  Piece b;
  b.kind = PieceKind::free;
  b.m = 2;
  b.omega = Omega::sign;
  b.w = sphere(0, cfg.D);
  b.sub = identity_sub(standard_simplex(1, cfg.K));
  r.pieces = {a, b};
  return build_object(r);
}

SimplicialSpectrumMap thm14_demo() {
  Recipe r;
  r.K = r.N = r.D = 3;
  Piece a;
  a.kind = PieceKind::free;
  a.m = 1;
  a.omega = Omega::point;
  a.w = circle(3);
  SimplicialSet z = standard_simplex(1, 3);
  // The vertex 0 of Delta[1].
  a.sub = generated_subobject(z, {{0, 1}});
  Piece b;
  b.kind = PieceKind::free;
  b.m = 2;
  b.omega = Omega::sphere;
  b.w = sphere(0, 3);
  b.sub = generated_subobject(circle(3), {});
  r.pieces = {a, b};
  return build_map(r);
}

}  // namespace reedy::harness
