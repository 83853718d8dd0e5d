#pragma once

#include <memory>
#include <vector>

#include "reedy/permutation.hpp"
#include "reedy/simplicial_set.hpp"

namespace reedy {

/// A truncated symmetric spectrum: levels X(0..N), each truncated at
/// dimension D, with Sigma_n acting on X(n) and structure maps
/// sigma_n: S^1 ^ X(n) -> X(n+1) for n < N.
///
/// Sigma_n is given on the adjacent transpositions tau_0..tau_{n-2}. A
/// permutation p acts so that the smash factor in position i moves to
/// position p(i). In the iterated map S^p ^ X(n) -> X(p+n) the sphere
/// coordinates occupy positions 0..p-1 and X(n) occupies p..p+n-1.
class SymSpectrum {
 public:
  SymSpectrum();
  SymSpectrum(std::vector<SimplicialSet> levels, std::vector<std::vector<SimplicialMap>> generators,
              std::vector<SimplicialMap> sigma);

  int strunc() const;
  int dtrunc() const;
  const SimplicialSet& level(int n) const;
  const std::vector<SimplicialSet>& levels() const;
  const SimplicialMap& generator(int n, int i) const;
  const std::vector<SimplicialMap>& generators(int n) const;
  const SimplicialMap& sigma(int n) const;

  /// The action of p on X(n), memoized per permutation.
  SimplicialMap act(int n, const Perm& p) const;
  /// The same action rebuilt from reduced_word(p, largest) without the memo.
  SimplicialMap act_by_word(int n, const Perm& p, bool largest) const;
  /// sigma^p: S^p ^ X(n) -> X(n+p); p = 0 is the unit isomorphism S^0 ^ X(n) = X(n).
  SimplicialMap sigma_iter(int n, int p) const;

  bool shares_storage_with(const SymSpectrum& o) const { return d_ == o.d_; }

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

class SpectrumMap {
 public:
  SpectrumMap();
  SpectrumMap(SymSpectrum dom, SymSpectrum cod, std::vector<SimplicialMap> components);

  const SymSpectrum& dom() const { return d_->dom; }
  const SymSpectrum& cod() const { return d_->cod; }
  const SimplicialMap& component(int n) const { return d_->components.at(static_cast<std::size_t>(n)); }
  const std::vector<SimplicialMap>& components() const { return d_->components; }

 private:
  struct Data {
    SymSpectrum dom;
    SymSpectrum cod;
    std::vector<SimplicialMap> components;
  };
  std::shared_ptr<const Data> d_;
};

/// The action of p in Sigma_n on sphere(n) by permuting circle factors.
SimplicialMap sphere_action(int n, int D, const Perm& p);

SymSpectrum sphere_spectrum(int N, int D);
/// S-bar: sphere(n) at levels n >= 1 and the point at level 0.
SymSpectrum bar_s(int N, int D);
/// The inclusion S-bar -> S.
SpectrumMap bar_s_inclusion(int N, int D);
SymSpectrum zero_spectrum(int N, int D);

/// The spectrum that is `level` at level m and the point elsewhere, with
/// all structure maps zero. `generators` are the Sigma_m generators.
SymSpectrum concentrated(int N, int m, const SimplicialSet& level, std::vector<SimplicialMap> generators);

/// The map between spectra concentrated at level m given by f_m there.
SpectrumMap concentrated_map(const SymSpectrum& dom, const SymSpectrum& cod, int m, const SimplicialMap& fm);

/// Levelwise smash with a simplicial set K on the right, with trivial
/// action on K: (X ^ K)(n) = X(n) ^ K.
SymSpectrum smash(const SymSpectrum& x, const SimplicialSet& k);
SpectrumMap smash(const SpectrumMap& f, const SimplicialMap& g);

/// The category of truncated symmetric spectra; colimits are levelwise.
struct Spectra {
  using Object = SymSpectrum;
  using Map = SpectrumMap;
  static constexpr const char* coordinate = "level";

  static Object zero_like(const Object& x) { return zero_spectrum(x.strunc(), x.dtrunc()); }
  static Map identity(const Object& x);
  static Map zero_map(const Object& x, const Object& y);
  static Map compose(const Map& f, const Map& g);
  static bool equal(const Map& f, const Map& g);
  static bool same(const Object& x, const Object& y);
  static const Object& dom(const Map& f) { return f.dom(); }
  static const Object& cod(const Map& f) { return f.cod(); }

  static Cocone<Spectra> wedge(const std::vector<Object>& summands);
  static Cocone<Spectra> coequalizer(const Map& f, const Map& g);
  static Map descend(const Map& epi, const Map& h);

  static CheckReport is_mono(const Map& f);
  static CheckReport is_epi(const Map& f);
  static CheckReport compare(const Map& f, const Map& g);
  /// Levels, Coxeter relations, sigma naturality and equivariance.
  static CheckReport validate(const Object& x);
  /// Components, compatibility with generators and with sigma.
  static CheckReport validate_map(const Map& f);
};

using SimplicialSpectra = SimplicialAmbient<Spectra>;
using SimplicialSpectrum = SimplicialObject<Spectra>;
using SimplicialSpectrumMap = SimplicialMapOf<Spectra>;

/// Full Sigma_p x Sigma_n equivariance of sigma^p for all p + n <= N,
/// checked on every pair of permutations. Exponential; meant for tests.
CheckReport check_full_equivariance(const SymSpectrum& x);

/// Builds a spectrum whose level n is a simplicial set with Sigma_n action,
/// checking nothing; shared by constructions that build all parts at once.
struct EquivariantSet {
  SimplicialSet object;
  std::vector<SimplicialMap> generators;
};

}  // namespace reedy
