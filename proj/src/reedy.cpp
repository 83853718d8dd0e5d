#include "reedy/reedy.hpp"

#include <map>

namespace reedy {

std::vector<char> degeneracy_union(const SimplicialObject<PointedSets>& z, int n) {
  if (n < 0 || n > z.trunc()) throw std::out_of_range("degeneracy_union: degree outside truncation");
  std::vector<char> hit(z.at(n).size(), 0);
  hit[0] = 1;
  if (n >= 1)
    for (int i = 0; i < n; ++i)
      for (Index e : z.degen(n - 1, i).table()) hit[e] = 1;
  return hit;
}

BisimplicialSet level_bisimplicial(const SimplicialSpectrum& x, int m) {
  std::vector<SimplicialSet> objs;
  for (int k = 0; k <= x.trunc(); ++k) objs.push_back(x.at(k).level(m));
  return BisimplicialSets::from_objects(objs, [&](int k, int i, bool face) {
    return (face ? x.face(k, i) : x.degen(k, i)).component(m);
  });
}

CheckReport is_good(const SimplicialSpectrum& x) {
  for (int k = 0; k <= x.trunc(); ++k) {
    auto r = is_cofibrant(x.at(k), Model::flat);
    if (!r) return r.clause("X_" + std::to_string(k) + " is flat-cofibrant").at("degree", k);
  }
  for (int k = 0; k < x.trunc(); ++k)
    for (int i = 0; i <= k; ++i) {
      auto r = is_levelwise_cofibration(x.degen(k, i));
      if (!r) return r.clause("s_" + std::to_string(i) + " is a levelwise cofibration").at("degree", k);
    }
  return CheckReport::ok();
}

CheckReport is_positive_good(const SimplicialSpectrum& x) {
  if (auto r = is_good(x); !r) return r;
  for (int k = 0; k <= x.trunc(); ++k) {
    auto r = is_cofibrant(x.at(k), Model::positive_flat);
    if (!r) return r.clause("X_" + std::to_string(k) + " is positive flat-cofibrant").at("degree", k);
  }
  return CheckReport::ok();
}

CheckReport is_reedy_cofibration(const SimplicialSpectrumMap& f, Model m) {
  for (int n = 0; n <= f.trunc(); ++n) {
    auto corner = reedy_corner_map<Spectra>(f, n);
    auto r = check_cofibration(corner.map, m);
    if (!r) return r.clause("corner map at degree " + std::to_string(n)).at("degree", n);
  }
  return CheckReport::ok();
}

CheckReport is_reedy_cofibrant(const SimplicialSpectrum& x, Model m) {
  return is_reedy_cofibration(zero_source(x), m);
}

CheckReport is_pointwise_cofibration(const SimplicialSpectrumMap& f, Model m) {
  for (int k = 0; k <= f.trunc(); ++k) {
    auto r = check_cofibration(f.component(k), m);
    if (!r) return r.clause("f_" + std::to_string(k)).at("degree", k);
  }
  return CheckReport::ok();
}

SimplicialSpectrum constant_simplicial(const SymSpectrum& x, int K) {
  if (K < 0) throw std::invalid_argument("simplicial truncation must be nonnegative");
  std::vector<SymSpectrum> objs(static_cast<std::size_t>(K + 1), x);
  SpectrumMap id = Spectra::identity(x);
  return SimplicialSpectra::from_objects(objs, [&](int, int, bool) { return id; });
}

SimplicialSpectrumMap constant_simplicial_map(const SpectrumMap& f, int K) {
  return SimplicialSpectrumMap(constant_simplicial(f.dom(), K), constant_simplicial(f.cod(), K),
                               std::vector<SpectrumMap>(static_cast<std::size_t>(K + 1), f));
}

SimplicialSpectrumMap zero_source(const SimplicialSpectrum& x) {
  SimplicialSpectrum z = SimplicialSpectra::zero_like(x);
  return SimplicialSpectra::zero_map(z, x);
}

namespace {

void require_square(const SimplicialSpectrum& x) {
  if (x.trunc() != x.at(0).dtrunc())
    throw std::invalid_argument("realization needs the simplicial degree bound K equal to the dimension bound D");
}

}  // namespace

SymSpectrum realize(const SimplicialSpectrum& x) {
  require_square(x);
  const int N = x.at(0).strunc(), D = x.at(0).dtrunc();
  std::vector<SimplicialSet> levels;
  std::vector<std::vector<SimplicialMap>> gens;
  for (int m = 0; m <= N; ++m) {
    levels.push_back(diagonal(level_bisimplicial(x, m)));
    gens.emplace_back();
    for (int i = 0; i + 1 < m; ++i) {
      std::vector<PointedMap> comps;
      for (int k = 0; k <= D; ++k) comps.push_back(x.at(k).generator(m, i).component(k));
      gens.back().emplace_back(levels[m], levels[m], std::move(comps));
    }
  }
  std::vector<SimplicialMap> sigma;
  for (int m = 0; m < N; ++m) {
    std::vector<PointedMap> comps;
    for (int k = 0; k <= D; ++k) comps.push_back(x.at(k).sigma(m).component(k));
    sigma.emplace_back(smash(circle(D), levels[m]), levels[m + 1], std::move(comps));
  }
  return SymSpectrum(std::move(levels), std::move(gens), std::move(sigma));
}

SpectrumMap realize_map(const SimplicialSpectrumMap& f) {
  SymSpectrum x = realize(f.dom()), y = realize(f.cod());
  std::vector<SimplicialMap> comps;
  for (int m = 0; m <= x.strunc(); ++m) {
    std::vector<PointedMap> c;
    for (int k = 0; k <= x.dtrunc(); ++k) c.push_back(f.component(k).component(m).component(k));
    comps.emplace_back(x.level(m), y.level(m), std::move(c));
  }
  return SpectrumMap(x, y, std::move(comps));
}

Cocone<SimplicialSpectra> pointwise_cofiber(const SimplicialSpectrumMap& f) {
  SimplicialSpectrum z = SimplicialSpectra::zero_like(f.dom());
  return pushout<SimplicialSpectra>(f, SimplicialSpectra::zero_map(f.dom(), z));
}

FlatArgument flat_argument(const SimplicialSpectrum& x, int n, int s, int dim) {
  auto lat = simplicial_latching<Spectra>(x, n);
  const SymSpectrum& a = lat.object;
  const SymSpectrum& xn = x.at(n);
  SpectralLatching la(a, s), lx(xn, s);
  PointedMap h1 = lx.nu(dim);
  PointedMap h2 = lat.nu.component(s).component(dim);
  PointedMap g1 = la.nu(dim);
  PointedMap g2 = latching_map_at(la, lx, lat.nu, dim);
  auto po1 = pushout<PointedSets>(g1, g2);
  PointedMap to_x[2] = {h2, h1};
  PointedMap f = po1.factor(to_x);
  Pullback pb = pullback(h2, h1);
  auto po2 = pushout<PointedSets>(pb.to_first, pb.to_second);
  PointedMap f_prime = po2.factor(to_x);
  PointedMap f_double_prime = po1.factor(po2.legs);
  std::map<std::pair<Index, Index>, Index> where;
  for (Index p = 0; p < pb.object.size(); ++p) where[{pb.to_first(p), pb.to_second(p)}] = p;
  PointedMap g = PointedMap::tabulate(g1.dom(), pb.object, [&](Index z) {
    auto it = where.find({g1(z), g2(z)});
    if (it == where.end()) throw std::logic_error("flat argument: L_s A does not map into the pullback");
    return it->second;
  });
  return {std::move(f), std::move(f_prime), std::move(f_double_prime), std::move(g)};
}

}  // namespace reedy
