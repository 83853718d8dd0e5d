#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reedy/cofibration.hpp"
#include "reedy/simplicial.hpp"
#include "reedy/spectrum.hpp"

namespace reedy {

/// The simplicial latching object of X at degree n with its map to X_n.
///
/// n = 0: the zero object. n = 1: X_0 with s_0. n >= 2: the coequalizer of
/// S', S'': V_{0<=i<j<=n-1} X_{n-2} => V_{k=0}^{n-1} X_{n-1}, where S' sends
/// summand (i,j) through s_i into summand j and S'' through s_{j-1} into
/// summand i; nu is induced by the coproduct of the degeneracies s_k.
template <class A>
struct SimplicialLatching {
  int n = 0;
  typename A::Object object;
  typename A::Map nu;
  // n >= 2 only: the wedge of the X_{n-1} copies and the quotient leg.
  std::optional<Cocone<A>> summands;
  std::optional<typename A::Map> quotient;
};

template <class A>
SimplicialLatching<A> simplicial_latching(const SimplicialObject<A>& x, int n) {
  if (n < 0 || n > x.trunc()) throw std::out_of_range("simplicial latching: degree outside truncation");
  SimplicialLatching<A> out;
  out.n = n;
  if (n == 0) {
    out.object = A::zero_like(x.at(0));
    out.nu = A::zero_map(out.object, x.at(0));
    return out;
  }
  if (n == 1) {
    out.object = x.at(0);
    out.nu = x.degen(0, 0);
    return out;
  }
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j <= n - 1; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  auto w1 = A::wedge(std::vector<typename A::Object>(pairs.size(), x.at(n - 2)));
  auto w2 = A::wedge(std::vector<typename A::Object>(static_cast<std::size_t>(n), x.at(n - 1)));
  std::vector<typename A::Map> s1, s2, degs;
  for (auto [i, j] : pairs) {
    s1.push_back(A::compose(x.degen(n - 2, i), w2.legs[j]));
    s2.push_back(A::compose(x.degen(n - 2, j - 1), w2.legs[i]));
  }
  for (int k = 0; k < n; ++k) degs.push_back(x.degen(n - 1, k));
  typename A::Map sp = w1.factor(s1), spp = w1.factor(s2), total = w2.factor(degs);
  if (!A::equal(A::compose(sp, total), A::compose(spp, total)))
    throw std::logic_error("latching: degeneracies do not satisfy s_j s_i = s_i s_{j-1}");
  auto q = A::coequalizer(sp, spp);
  out.object = q.object;
  out.nu = q.factor1(total);
  out.summands = w2;
  out.quotient = q.legs[0];
  return out;
}

/// The induced map L~_n X -> L~_n Y of f.
template <class A>
typename A::Map latching_of_map(const SimplicialMapOf<A>& f, const SimplicialLatching<A>& lx,
                                const SimplicialLatching<A>& ly) {
  const int n = lx.n;
  if (n == 0) return A::zero_map(lx.object, ly.object);
  if (n == 1) return f.component(0);
  std::vector<typename A::Map> maps;
  for (int k = 0; k < n; ++k) maps.push_back(A::compose(f.component(n - 1), ly.summands->legs[k]));
  return A::descend(*lx.quotient, A::compose(lx.summands->factor(maps), *ly.quotient));
}

/// X_n u_{L~_n X} L~_n Y -> Y_n.
template <class A>
struct CornerMap {
  Cocone<A> pushout;
  typename A::Map map;
};

template <class A>
CornerMap<A> reedy_corner_map(const SimplicialMapOf<A>& f, int n) {
  auto lx = simplicial_latching(f.dom(), n);
  auto ly = simplicial_latching(f.cod(), n);
  auto po = pushout<A>(lx.nu, latching_of_map(f, lx, ly));
  typename A::Map maps[2] = {f.component(n), ly.nu};
  typename A::Map m = po.factor(maps);
  return {std::move(po), std::move(m)};
}

/// Reedy cofibrancy in a set-like ambient: every corner map is a monomorphism.
template <class A>
CheckReport is_reedy_mono(const SimplicialMapOf<A>& f) {
  for (int n = 0; n <= f.trunc(); ++n) {
    auto r = A::is_mono(reedy_corner_map(f, n).map);
    if (!r) return r.at("degree", n);
  }
  return CheckReport::ok();
}

/// The image of nu_n for a simplicial pointed set, computed independently as
/// the union of the images of s_0, ..., s_{n-1} into degree n (flags per element).
std::vector<char> degeneracy_union(const SimplicialObject<PointedSets>& z, int n);

// ---- simplicial symmetric spectra ----------------------------------------

/// Degree k of X_bullet at spectral level m: the simplicial set X_k(m) for
/// every k, i.e. the bisimplicial set X(m)_bullet.
SimplicialObject<SimplicialAmbient<PointedSets>> level_bisimplicial(const SimplicialSpectrum& x, int m);

CheckReport is_good(const SimplicialSpectrum& x);
CheckReport is_positive_good(const SimplicialSpectrum& x);
CheckReport is_reedy_cofibration(const SimplicialSpectrumMap& f, Model m);
CheckReport is_reedy_cofibrant(const SimplicialSpectrum& x, Model m);
/// Every f_k is a cofibration in the given class.
CheckReport is_pointwise_cofibration(const SimplicialSpectrumMap& f, Model m);

/// Constant simplicial object on X with K + 1 degrees.
SimplicialSpectrum constant_simplicial(const SymSpectrum& x, int K);
SimplicialSpectrumMap constant_simplicial_map(const SpectrumMap& f, int K);
SimplicialSpectrumMap zero_source(const SimplicialSpectrum& x);

/// |X|(m) = diag X(m)_bullet; requires K = D.
SymSpectrum realize(const SimplicialSpectrum& x);
SpectrumMap realize_map(const SimplicialSpectrumMap& f);

/// Z_n = Y_n u_{X_n} 0 degreewise, with the quotient Y -> Z.
Cocone<SimplicialSpectra> pointwise_cofiber(const SimplicialSpectrumMap& f);

/// The maps of the Reedy flat argument at degree n, spectral level s and
/// dimension m, with A = L~_n X and nu~: A -> X_n:
///   h_1 = nu_s(X_n), h_2 = nu~(s), g_1 = nu_s(A), g_2 = L_s(nu~),
///   PO_1 = A(s) u_{L_s A} L_s X_n,  PB = A(s) x_{X_n(s)} L_s X_n,
///   PO_2 = A(s) u_{PB} L_s X_n,  F: PO_1 -> X_n(s),  F': PO_2 -> X_n(s),
///   F'': PO_1 -> PO_2,  G: L_s A -> PB.
struct FlatArgument {
  PointedMap f, f_prime, f_double_prime, g;
};
FlatArgument flat_argument(const SimplicialSpectrum& x, int n, int s, int dim);

}  // namespace reedy
