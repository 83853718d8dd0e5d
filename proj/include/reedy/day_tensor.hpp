#pragma once

#include <memory>
#include <span>
#include <vector>

#include "reedy/spectrum.hpp"

namespace reedy {

/// Level n of the Day tensor A_1 (x) ... (x) A_k of symmetric spectra:
///
///   (A_1 (x) ... (x) A_k)(n) = V_{(p_1..p_k), gamma} A_1(p_1) ^ ... ^ A_k(p_k)
///
/// over compositions p_1 + ... + p_k = n (lexicographic) and shuffles gamma
/// for those block sizes (lexicographic by image sequence). The element
/// [gamma; e_1, ..., e_k] stands for gamma (x) (e_1 ^ ... ^ e_k); sigma in
/// Sigma_n sends it to [gamma'; alpha_1 e_1, ..., alpha_k e_k] where
/// sigma gamma = gamma' (alpha_1 (+) ... (+) alpha_k).
///
/// Everything is available one dimension at a time; flatness checks never
/// need the face maps.
class DayLevel {
 public:
  struct Summand {
    std::vector<int> blocks;
    Perm gamma;
  };

  DayLevel(std::vector<SymSpectrum> factors, int n);

  int n() const;
  int dtrunc() const;
  const std::vector<SymSpectrum>& factors() const;
  const std::vector<Summand>& summands() const;
  std::size_t summand_index(const std::vector<int>& blocks, const Perm& gamma) const;

  PointedSet at(int dim) const;
  /// The element [gamma_s; parts]; 0 if any part is a basepoint.
  Index encode(int dim, std::size_t summand, std::span<const Index> parts) const;
  /// Summand and parts of a non-basepoint element.
  std::size_t decode(int dim, Index e, std::vector<Index>& parts) const;

  /// tau_i acting on dimension `dim`.
  PointedMap generator_at(int dim, int i) const;
  /// d_i or s_i at dimension `dim`, applied to every part.
  PointedMap operator_at(int dim, int i, bool face) const;

  SimplicialSet object() const;
  std::vector<SimplicialMap> generators() const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

/// [gamma; e_j] -> [gamma; f_j(e_j)] at one dimension.
PointedMap day_map_at(const DayLevel& from, const DayLevel& to, const std::vector<SpectrumMap>& fs, int dim);

/// The spectrum A_1 (x) ... (x) A_k up to the least truncation, with structure
/// maps through the first factor: t ^ [gamma; e_1, ...] -> [1 (+) gamma; sigma(t ^ e_1), ...].
SymSpectrum day_spectrum(const std::vector<SymSpectrum>& factors);
SpectrumMap day_spectrum_map(const std::vector<SpectrumMap>& fs);
/// As above, with the two Day spectra already built.
SpectrumMap day_spectrum_map(const std::vector<SpectrumMap>& fs, const SymSpectrum& dom, const SymSpectrum& cod);

/// The free spectrum S (x) G.
SymSpectrum free_spectrum(const SymSpectrum& g);
SpectrumMap free_map(const SpectrumMap& f);
SpectrumMap free_map(const SpectrumMap& f, const SymSpectrum& dom, const SymSpectrum& cod);

/// (A ^_S B)(n): the coequalizer of the right S-action on A and the left
/// S-action on B, (A (x) S (x) B)(n) => (A (x) B)(n). The left action on B is
/// the iterated structure map; the right action on A is
/// a ^ t -> chi . sigma^r(t ^ a) with chi moving the sphere block behind A's.
class SmashOverS {
 public:
  SmashOverS(const SymSpectrum& a, const SymSpectrum& b, int n);

  const DayLevel& pair() const;
  const DayLevel& triple() const;
  PointedSet at(int dim) const;
  /// (A (x) B)(n) -> (A ^_S B)(n) at one dimension.
  const PointedMap& leg(int dim) const;
  /// The two parallel maps at one dimension.
  PointedMap right_action_at(int dim) const;
  PointedMap left_action_at(int dim) const;

  SimplicialSet object() const;
  SimplicialMap leg_map() const;
  std::vector<SimplicialMap> generators() const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

/// [gamma; a, x] -> gamma . sigma^p(a ^ x) from (A (x) X)(n) to X(n), where
/// A is S or S-bar (A(p) = S^p for p >= 1).
PointedMap unit_at(const DayLevel& sx, int dim);

/// Spectral latching L_n X = (S-bar ^_S X)(n) with nu_n: L_n X -> X(n).
class SpectralLatching {
 public:
  SpectralLatching(const SymSpectrum& x, int n);

  int n() const;
  const SymSpectrum& spectrum() const;
  const SmashOverS& smash() const;
  PointedSet at(int dim) const;
  const PointedMap& nu(int dim) const;

  SimplicialSet object() const;
  SimplicialMap nu_map() const;
  std::vector<SimplicialMap> generators() const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

/// L_n f: L_n X -> L_n Y at one dimension.
PointedMap latching_map_at(const SpectralLatching& lx, const SpectralLatching& ly, const SpectrumMap& f, int dim);
SimplicialMap latching_map(const SpectralLatching& lx, const SpectralLatching& ly, const SpectrumMap& f);

/// The unit isomorphism (S ^_S X)(n) -> X(n) at one dimension, and the
/// explicit inverse x -> [id; 1 in S^0, x].
struct UnitIso {
  PointedMap forward;
  PointedMap inverse;
};
UnitIso unit_iso_at(const SmashOverS& sx, int dim);
/// Checks forward and inverse compose to identities on every dimension.
CheckReport check_unit_iso(const SymSpectrum& x, int n);

}  // namespace reedy
