#pragma once

// Canonical triangulated models of bridge surfaces, with the standard curve
// and arc dictionary used throughout: genus curves alpha_i / beta_i, their
// neighborhood boundaries delta_i, puncture-pair curves rho_j, nested curves
// omega_j, and the straight shadow arcs pairing consecutive punctures.

#include "multisec/curves.hpp"

namespace multisec {

// genus >= 1: fan-triangulated 4g-gon (standard commutator word), extended by
// a two-sided pocket when punctures are present; genus 0: doubled fan polygon.
Triangulation canonical_triangulation(SurfaceSignature sig);

struct StandardSurface {
  SurfaceSignature sig;
  Triangulation T;

  std::vector<MultiCurve> alpha, beta, delta;  // size genus
  std::vector<MultiCurve> rho;                 // size b: around puncture pair j
  std::vector<MultiCurve> omega;               // size max(b-1,0): around first 2j+2 punctures
  std::vector<Arc> shadows;                    // size b: straight pair arcs

  std::vector<int> puncture_order;             // puncture vertices, chain order
  // chain_segments[i]: edge path from puncture i to puncture i+1
  std::vector<std::vector<int>> chain_segments;
};

// memoized; the returned reference (and its triangulation) stays valid
const StandardSurface& standard_surface(SurfaceSignature sig);

}  // namespace multisec
