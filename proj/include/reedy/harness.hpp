#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "reedy/reedy.hpp"

namespace reedy::harness {

enum class Strategy { structured_good, rejection, adversarial };

const char* to_string(Strategy s);
bool parse_strategy(const std::string& s, Strategy& out);

struct GenConfig {
  std::uint64_t seed = 1;
  int max_set = 5;    // pointed sets, oracle simplicial sets, Sigma_m-sets
  int max_cells = 8;  // per-degree size of the simplicial sets pieces are built on
  int K = 3;
  int N = 3;
  int D = 4;
  Strategy strategy = Strategy::structured_good;
};

/// Thrown when a generator exceeds its retry budget.
struct Starvation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Seeded stream; case i of a run with seed s draws from Rng(s, i).
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);
  std::uint64_t next() { return engine_(); }
  int below(int n);  // uniform-ish in [0, n)
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool chance(int num, int den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

// ---- small objects ----------------------------------------------------------

PointedSet gen_pointed(Rng& rng, const GenConfig& cfg);
PointedMap gen_pointed_map(Rng& rng, const PointedSet& dom, const PointedSet& cod);

/// Quotient of a wedge of standard simplices by random identifications of
/// simplices; every level has at most `cap` elements (rejection with a retry budget).
SimplicialSet gen_sset(Rng& rng, int trunc, Index cap);
SimplicialSet gen_sset(Rng& rng, const GenConfig& cfg);

/// Quotient of a wedge of external smashes Z [x] W by identifications of
/// bisimplices; outer truncation K, inner D, at most `cap` elements per bidegree.
BisimplicialSet gen_bisimplicial(Rng& rng, int K, int D, Index cap);
BisimplicialSet gen_bisimplicial(Rng& rng, const GenConfig& cfg);

/// The map Delta[a]_+ [x] Delta[b]_+ -> B classifying x in (B_a)_b.
BisimplicialMap bisimplicial_yoneda(const BisimplicialSet& b, int a, int bdim, Index x);

// ---- spectra ----------------------------------------------------------------

enum class Omega { point, natural, sign, regular, sphere };
const char* to_string(Omega o);

/// A pointed simplicial set with Sigma_m action: W ^ Omega_+ (sphere: W ^ S^m).
EquivariantSet equivariant_factor(Omega o, int m, const SimplicialSet& w);

/// The map S (x) G -> X classifying x in X(m)_k, where G is concentrated at
/// level m with G(m) = Delta[k]_+ ^ (Sigma_m)_+.
SpectrumMap spectrum_yoneda(const SymSpectrum& x, int m, int k, Index element);

/// Wedges of sphere, S-bar, free, concentrated and suspension spectra,
/// then quotients by random identifications of simplices.
SymSpectrum gen_spectrum(Rng& rng, const GenConfig& cfg);

// ---- simplicial spectra -----------------------------------------------------

enum class PieceKind { free, concentrated, bar };
const char* to_string(PieceKind k);

/// One wedge summand of a generated simplicial spectrum. Degree k is
///   free:          S (x) G_k,   G_k concentrated at m with G_k(m) = Z_k ^ E
///   concentrated:  G_k
///   bar:           S-bar ^ (Z_k ^ W)
/// with E = equivariant_factor(omega, m, w). `sub` is a simplicial subset
/// Z' -> Z; the source side of a generated map uses Z'.
struct Piece {
  PieceKind kind = PieceKind::free;
  int m = 0;
  Omega omega = Omega::point;
  SimplicialSet w;
  SimplicialMap sub;
  std::string describe() const;
};

struct Recipe {
  int K = 3, N = 3, D = 4;
  std::vector<Piece> pieces;
  std::string describe() const;
};

SimplicialSpectrum build_object(const Recipe& r, bool source_side = false);
/// The wedge of the maps induced by every piece's subset inclusion.
SimplicialSpectrumMap build_map(const Recipe& r);

Recipe gen_good_recipe(Rng& rng, const GenConfig& cfg, bool positive);
SimplicialSpectrum gen_good_simplicial_spectrum(Rng& rng, const GenConfig& cfg, bool positive = false);

enum class Theorem { goodness, levelwise_map, flat_map, composite };
/// "3.2", "4.1", "4.2", "1.4".
const char* suite_name(Theorem t);
bool parse_theorem(const std::string& s, Theorem& out);

struct Instance {
  Recipe recipe;
  bool positive = false;
  SimplicialSpectrumMap map;  // for goodness: 0 -> X
};

/// Draws until the hypotheses of the theorem hold (re-checked here), counting
/// rejected draws; throws Starvation past the discard ceiling.
Instance gen_thm_hypothesis_instance(Rng& rng, const GenConfig& cfg, Theorem t, bool positive, int& discards);

/// Hypothesis check of a theorem on an instance; failure explains which clause.
CheckReport check_hypotheses(const SimplicialSpectrumMap& f, Theorem t, bool positive);
/// Conclusion check.
CheckReport check_conclusion(const SimplicialSpectrumMap& f, Theorem t, bool positive);

// ---- oracles ----------------------------------------------------------------

/// The union of the images of s_0..s_{n-1} in Z_n as a subobject, with its inclusion.
PointedMap oracle_latching_sets(const SimplicialSet& z, int n);

/// Compares image(nu~_n) with the oracle and checks nu~_n is mono.
CheckReport check_oracle_agreement(const SimplicialSet& z, int n);

/// For f1: C -> D, f2: B -> D mono, the map C u_{B x_D C} B -> D is mono.
CheckReport check_mediating_mono(const PointedMap& f1, const PointedMap& f2);
/// Every injective pointed map A -> B.
std::vector<PointedMap> all_monos(const PointedSet& a, const PointedSet& b);

/// Greedy shrinking while `fails` holds: drops whole pieces, then
/// non-degenerate simplices of each piece's base (with everything built on them).
Recipe shrink_recipe(const Recipe& r, const std::function<bool(const Recipe&)>& fails);

// ---- suites -----------------------------------------------------------------

struct Counterexample {
  int case_index = -1;
  std::string property;
  std::string report;
  std::string recipe;
  std::string document;  // canonical JSON of the failing input
};

struct Summary {
  std::string suite;
  std::uint64_t seed = 0;
  std::string strategy;
  int requested = 0;
  int cases = 0;  // evaluated
  int passes = 0;
  int discards = 0;
  bool starved = false;
  std::string starvation;
  std::optional<Counterexample> counterexample;
  std::vector<std::string> notes;

  bool ok() const { return !starved && !counterexample && passes == cases; }
};

/// Suites: 3.2, 4.1, 4.2, 1.4, lemmas, unit, bisimplicial, oracle.
std::vector<std::string> suite_names();
/// cases <= 0 picks the default size of the suite.
Summary run_suite(const std::string& suite, const GenConfig& cfg, int cases = 0);
int default_cases(const std::string& suite);

// ---- built-in corpus --------------------------------------------------------

/// The good simplicial spectrum behind `good-demo`.
SimplicialSpectrum good_demo();
/// The map behind `thm14-demo`: K = D = 3, N = 3.
SimplicialSpectrumMap thm14_demo();

}  // namespace reedy::harness
