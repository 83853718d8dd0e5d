#pragma once

#include <vector>

#include "reedy/pointed_set.hpp"
#include "reedy/simplicial.hpp"

namespace reedy {

using SSets = SimplicialAmbient<PointedSets>;
using SimplicialSet = SimplicialObject<PointedSets>;
using SimplicialMap = SimplicialMapOf<PointedSets>;

// A bisimplicial set is a simplicial object in simplicial sets: the outer
// index is the simplicial degree k, the inner one the dimension.
using BisimplicialSets = SimplicialAmbient<SSets>;
using BisimplicialSet = SimplicialObject<SSets>;
using BisimplicialMap = SimplicialMapOf<SSets>;

/// The point (one element in every dimension 0..D).
SimplicialSet point_sset(int D);

/// Constant simplicial set on P: every operator is the identity.
SimplicialSet constant_sset(const PointedSet& p, int D);
SimplicialMap constant_map(const PointedMap& f, int D);

/// Delta[1]/boundary. Level k holds the basepoint and, for j = 1..k, the
/// sequence 0^j 1^(k+1-j); element j has index j.
SimplicialSet circle(int D);

/// sphere(0) is the constant two-point set; sphere(n) = circle ^ sphere(n-1).
/// Throws for n > D.
SimplicialSet sphere(int n, int D);

/// Delta[n] with a disjoint basepoint. Level m lists the monotone maps
/// [m] -> [n] in lexicographic order after the basepoint.
SimplicialSet standard_simplex(int n, int D);
/// The monotone sequence of a non-basepoint element of standard_simplex(n, D) at level m.
std::vector<int> simplex_element(int n, int m, Index e);
Index simplex_index(int n, const std::vector<int>& alpha);

/// The map standard_simplex(k, D) -> X classifying x in X_k.
SimplicialMap yoneda_map(const SimplicialSet& x, int k, Index element);

SimplicialSet smash(const SimplicialSet& a, const SimplicialSet& b);
SimplicialMap smash(const SimplicialMap& f, const SimplicialMap& g);

/// Inclusion of the smallest simplicial subset containing `generators`
/// (pairs of dimension and element). Elements keep their relative order.
SimplicialMap generated_subobject(const SimplicialSet& x, const std::vector<std::pair<int, Index>>& generators);

/// X / A for a simplicial subset A -> X.
Cocone<SSets> collapse(const SimplicialMap& inclusion);

/// diag(B)_k = (B_k)_k. Requires the outer and inner truncations to agree.
SimplicialSet diagonal(const BisimplicialSet& b);
SimplicialMap diagonal(const BisimplicialMap& f);

/// Bisimplicial set constant in the outer direction.
BisimplicialSet constant_bisimplicial(const SimplicialSet& x, int K);

/// For every element x of degree n-1 some j has d_j s_j x = x; returns the
/// first element where no j works (never, for a valid simplicial set).
CheckReport check_face_sections(const SimplicialSet& x);

}  // namespace reedy
