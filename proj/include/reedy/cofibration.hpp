#pragma once

#include <string>

#include "reedy/day_tensor.hpp"

namespace reedy {

enum class Model { levelwise, positive_levelwise, flat, positive_flat };

const char* to_string(Model m);
/// Parses "levelwise", "positive-levelwise", "flat", "positive-flat".
bool parse_model(const std::string& s, Model& out);

/// The latching map X(n) u_{L_n X} L_n Y -> Y(n) of f at one dimension,
/// together with the pushout it is computed from.
struct LatchingCorner {
  Cocone<PointedSets> pushout;  // legs: from X(n), from L_n Y
  PointedMap map;               // pushout -> Y(n)
};
LatchingCorner latching_corner_at(const SpectralLatching& lx, const SpectralLatching& ly, const SpectrumMap& f,
                                  int dim);
/// All dimensions at once, as a map of simplicial sets.
SimplicialMap latching_corner_map(const SpectrumMap& f, int n);

/// Verdicts of the four cofibration classes. A failure names the first
/// (level, dim) and the colliding pair; the positive variants check the
/// level-0 isomorphism clause first.
CheckReport is_levelwise_cofibration(const SpectrumMap& f);
CheckReport is_positive_levelwise_cofibration(const SpectrumMap& f);
CheckReport is_flat_cofibration(const SpectrumMap& f);
CheckReport is_positive_flat_cofibration(const SpectrumMap& f);
CheckReport check_cofibration(const SpectrumMap& f, Model m);

/// 0 -> X in the given class.
CheckReport is_cofibrant(const SymSpectrum& x, Model m);

/// Re-evaluates the corner map named by a flat-check witness and confirms
/// that `first` and `second` are distinct and share the image `image`.
bool replay_flat_witness(const SpectrumMap& f, const Witness& w);

}  // namespace reedy
