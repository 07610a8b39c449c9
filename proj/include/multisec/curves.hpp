#pragma once

// Isotopy classes of curves and arcs on a triangulated surface, with exact
// operations: intersection numbers via overlay + bigon removal, cutting,
// Dehn twists, regular-neighborhood boundaries.

#include "multisec/geom.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace multisec {

struct SurfaceSignature {
  int genus = 0;
  int punctures = 0;  // p = 2b bridge points
  int b() const { return punctures / 2; }
  bool admissible() const { return pants_count() > 0; }
  // the torus carries single-curve vertices (Farey convention)
  int pants_count() const {
    if (genus == 1 && punctures == 0) return 1;
    return 3 * genus + punctures - 3;
  }
  friend bool operator==(const SurfaceSignature& x, const SurfaceSignature& y) {
    return x.genus == y.genus && x.punctures == y.punctures;
  }
  friend auto operator<=>(const SurfaceSignature&, const SurfaceSignature&) = default;
};

class MultiCurve {
 public:
  MultiCurve() = default;
  // takes tightened canonical weights; use from_embedded / from_weights to build
  const Triangulation* tri() const { return T_; }
  const std::vector<int>& weights() const { return w_; }
  int component_count() const { return components_; }
  int total_weight() const;
  bool empty() const { return T_ == nullptr; }
  const Embedded& embedding() const { return emb_; }

  // canonical embedded representative traced from weights; throws on invalid
  static MultiCurve from_weights(const Triangulation& T, std::vector<int> w);
  // tightens, drops trivial components (reported via dropped if non-null)
  static MultiCurve from_embedded(Embedded e, int* dropped = nullptr);

  friend bool operator==(const MultiCurve& a, const MultiCurve& b) {
    return a.T_ == b.T_ && a.w_ == b.w_;
  }
  friend bool operator<(const MultiCurve& a, const MultiCurve& b) { return a.w_ < b.w_; }

 private:
  const Triangulation* T_ = nullptr;
  std::vector<int> w_;
  int components_ = 0;
  Embedded emb_;
};

class Arc {
 public:
  Arc() = default;
  const Triangulation* tri() const { return T_; }
  const Strand& strand() const { return s_; }
  int v_start() const { return s_.v_start; }
  int v_end() const { return s_.v_end; }
  // canonical corridor key: [v_lo, v_hi, slot sequence in canonical direction]
  const std::vector<int>& key() const { return key_; }

  static Arc from_strand(const Triangulation& T, Strand s);  // tightens

  friend bool operator==(const Arc& a, const Arc& b) {
    return a.T_ == b.T_ && a.key_ == b.key_;
  }
  friend bool operator<(const Arc& a, const Arc& b) { return a.key_ < b.key_; }

 private:
  const Triangulation* T_ = nullptr;
  Strand s_;
  std::vector<int> key_;
};

struct CutComponent {
  int genus = 0;
  int punctures = 0;   // real punctures inside
  int boundaries = 0;  // boundary circles coming from the cut
  bool has_aux = false;
  std::vector<int> puncture_vertices;
  friend auto operator<=>(const CutComponent&, const CutComponent&) = default;
};

struct CutResult {
  std::vector<CutComponent> components;
};

// --- operations on isotopy classes ---

int geometric_intersection(const MultiCurve& a, const MultiCurve& b);
int geometric_intersection(const MultiCurve& a, const Arc& b);
int geometric_intersection(const Arc& a, const Arc& b);  // interior crossings
int algebraic_intersection(const MultiCurve& a, const MultiCurve& b);

CutResult cut_along(const MultiCurve& c);
// cut along several disjoint systems at once (their union must be embeddable
// without crossings, i.e. pairwise geometric intersection zero)
CutResult cut_along_all(const Triangulation& T, const std::vector<MultiCurve>& cs,
                        const std::vector<Arc>& arcs = {});

bool is_essential(const MultiCurve& c);              // connected input
bool bounds_once_punctured_disk(const MultiCurve& c);
bool is_separating(const MultiCurve& c);
std::optional<std::vector<int>> encloses_punctures(const MultiCurve& c);

// closed-surface-aware isotopy test for connected curves (equal keys, or
// disjoint and cobounding an annulus whose interior holds no puncture)
bool is_isotopic(const MultiCurve& a, const MultiCurve& b);

MultiCurve dehn_twist(const MultiCurve& c, const MultiCurve& along, int power);
Arc dehn_twist(const Arc& a, const MultiCurve& along, int power);

// boundary of a regular neighborhood of a union of disjointly-embeddable
// curves/arcs (pairwise minimal position is computed internally)
MultiCurve boundary_of_neighborhood(const Triangulation& T,
                                    const std::vector<MultiCurve>& curves,
                                    const std::vector<Arc>& arcs);

MultiCurve vertex_link(const Triangulation& T, int v);
// boundary of a neighborhood of a subtree of the 1-skeleton
MultiCurve boundary_of_edge_tree(const Triangulation& T, const std::vector<int>& tree_edges);

// build a connected curve from a dual cycle given as (edge, out-slot) hops
MultiCurve curve_from_hops(const Triangulation& T,
                           const std::vector<std::pair<int, int>>& hops);

// signed crossing word of x against disjoint system curves (letters 0-based
// indices into sys, negative-1 encoding for reversed sign handled by caller)
struct Letter { int gen; int sign; };
std::vector<Letter> crossing_word(const MultiCurve& x, const std::vector<MultiCurve>& sys);
std::vector<Letter> crossing_word(const Arc& x, const std::vector<MultiCurve>& sys);

bool freely_trivial_cyclic(const std::vector<Letter>& word);

// all connected essential curves of total weight <= bound (canonical keys);
// memoized per (triangulation, bound)
const std::vector<MultiCurve>& enumerate_curves(const Triangulation& T, int weight_bound);

// memoized pairwise geometric intersection for repeated queries
int geometric_intersection_cached(const MultiCurve& a, const MultiCurve& b);

}  // namespace multisec
