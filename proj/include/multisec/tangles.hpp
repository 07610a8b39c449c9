#pragma once

// Handlebody and trivial-tangle data on a bridge surface: cut systems,
// shadow systems, and the c-disk tests deciding when curves and whole pants
// decompositions lie in a tangle's disk set.

#include "multisec/pants.hpp"

namespace multisec {

struct CutSystem {
  const Triangulation* T = nullptr;
  // genus many disjoint non-separating curves whose joint cut is planar
  std::vector<MultiCurve> curves;
};

struct ShadowSystem {
  const Triangulation* T = nullptr;
  // b arcs pairing up the punctures, pairwise disjoint
  std::vector<Arc> arcs;

  std::vector<std::vector<int>> key() const;
};

struct TangleData {
  CutSystem cut_system;
  ShadowSystem shadows;
};

// validating constructors; throw std::invalid_argument on violation
CutSystem make_cut_system(const Triangulation& T, std::vector<MultiCurve> curves);
ShadowSystem make_shadow_system(const Triangulation& T, std::vector<Arc> arcs);
TangleData make_tangle(CutSystem cut, ShadowSystem shadows);

// the trace-word test: x bounds an embedded disk in the handlebody determined
// by C iff its crossing word against the cut curves is freely trivial
bool bounds_disk_in_handlebody(const MultiCurve& x, const CutSystem& C);

enum class CDiskKind { None, Compressing, Cut };
CDiskKind c_disk_kind(const MultiCurve& x, const TangleData& t);
bool is_compressing(const MultiCurve& x, const TangleData& t);
bool is_cut(const MultiCurve& x, const TangleData& t);

// shadow systems one elementary slide away: twists of all arcs along an
// essential disk-bounding curve (the twist extends over the disk, dragging
// the strands across it). slider_weight_bound 0 picks a bound from the data.
std::vector<ShadowSystem> shadow_slides(const TangleData& t, int slider_weight_bound = 0);

bool in_disk_set(const PantsDecomposition& P, const TangleData& t, int slide_budget,
                 int slider_weight_bound = 0);

std::vector<PantsDecomposition> enumerate_disk_set(const TangleData& t, int weight_bound);

// the same enumeration over the slide orbit of the shadows: shadows are only
// a representative of the tangle, and a c-disk avoiding one representative
// can cross another
std::vector<PantsDecomposition> enumerate_disk_set(const TangleData& t, int weight_bound,
                                                   int slide_budget,
                                                   int slider_weight_bound = 0);

}  // namespace multisec
