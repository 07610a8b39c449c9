#pragma once

// Internal overlay engine: exact combinatorial arrangement of several embedded
// curve/arc systems on a triangulated surface.  Two-family crossing rule: the
// chords crossing any given chord must be pairwise disjoint (callers overlay
// either two systems, or one system against a disjoint multi-system).

#include "multisec/curves.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace multisec {
namespace ov {

enum class NodeKind : uint8_t { Vertex, EdgePoint, Cross };
enum class CellKind : uint8_t { EdgeArc, ChordSeg };

struct Node {
  NodeKind kind;
  int vertex = -1;                 // Vertex
  int edge = -1;                   // EdgePoint: edge id
  int ep_index = -1;               // EdgePoint: rank on its edge
  int chord_a = -1, chord_b = -1;  // Cross: chord ids
  int sign = 0;                    // Cross: +1 if (a-travel, b-travel) is ccw
};

struct Dart {
  int from = -1, to = -1;
  int twin = -1;
  CellKind kind;
  // ChordSeg: chord id, piece index, true if dart follows travel direction
  // EdgeArc: edge id, interval index, true if dart follows v0->v1
  int owner = -1;
  int piece = -1;
  bool fwd = true;
  int face = -1;
};

// one strand segment sitting in a triangle
struct Chord {
  int input, strand, seg;
  int tri;
  // ends: boundary keys and node ids; a = travel start of the segment
  long long key_a = -1, key_b = -1;
  int node_a = -1, node_b = -1;
  std::vector<int> cross_nodes;  // ordered a->b
  std::vector<int> piece_darts;  // dart id of each piece in travel direction
};

struct EdgePointRec {
  int input, strand, k;  // crossing k of that strand
  Rat t;
  int node = -1;
};

class Ov {
 public:
  Ov(const Triangulation& T, std::vector<Embedded> inputs);

  const Triangulation& T() const { return *T_; }
  const std::vector<Embedded>& inputs() const { return ins_; }

  int crossings_between(int i, int j) const;
  int algebraic_between(int i, int j) const;  // oriented sum; travel = stored order

  struct BigonDesc {
    int input_i, input_j;
    // walk darts of the region boundary: run_i then run_j (travel of walk)
    std::vector<int> run_i, run_j;
    int corner_a = -1, corner_b = -1;  // nodes; corner_b may be a Vertex (half bigon)
    bool half = false;
  };
  std::optional<BigonDesc> find_bigon(int i, int j, bool allow_aux);

  // replace input i's run by a parallel copy of the j-run; returns i's new system
  Embedded reroute(const BigonDesc& bg) const;

  // complement regions after cutting along the strands of cut_inputs; cut
  // strands may cross each other (the union is then treated as a graph) but
  // non-cut strands must be disjoint from the cut set
  struct Regions {
    std::vector<int> face_region;           // face -> region id
    std::vector<CutComponent> comps;        // per region
    std::vector<std::vector<int>> walks;    // boundary walks as dart cycles
    std::vector<int> walk_region;           // walk -> region id
    int count() const { return (int)comps.size(); }
  };
  Regions regions(const std::vector<int>& cut_inputs) const;
  int region_of_vertex(const Regions& r, int v) const;
  int region_of_strand(const Regions& r, int input, int strand) const;

  // crossing letters along strand (input,strand) against all other inputs:
  // (other_input, sign), in travel order
  std::vector<std::pair<int, int>> trace_letters(int input, int strand) const;

  // data access for drivers
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Dart>& darts() const { return darts_; }
  const std::vector<Chord>& chords() const { return chords_; }
  int face_count() const { return nfaces_; }
  const std::vector<std::vector<EdgePointRec>>& edge_points() const { return epts_; }
  int dart_at_vertex(int v) const;  // some dart leaving the vertex node, -1 if none
  int node_of_vertex(int v) const { return v; }
  // walk support
  int face_next(int d) const { return fnext_[d]; }
  // darts strictly between d_out and twin(d_in) in ccw rotation order at the
  // node d_in points to (the walk-left wedge scan); used for parallel pushoffs
  std::vector<int> left_scan(int d_in, int d_out) const;
  // for an edge dart leaving a vertex node: the star corner (tri, corner)
  // counterclockwise-after it in the vertex rotation
  std::pair<int, int> star_corner_after(int dart) const;
  const std::vector<int>& rotation(int node) const { return rot_[node]; }

  // resolve oriented smoothing of all crossings between the union of all
  // inputs (used by dehn_twist): returns loops as strands
  Embedded resolve_all() const;

 private:
  const Triangulation* T_;
  std::vector<Embedded> ins_;
  std::vector<std::vector<EdgePointRec>> epts_;  // per edge, sorted by t
  std::vector<Node> nodes_;
  std::vector<Chord> chords_;
  std::vector<Dart> darts_;
  std::vector<std::vector<int>> rot_;    // per node: ccw dart list
  std::vector<int> fnext_;
  int nfaces_ = 0;
  std::map<std::tuple<int, int, int>, int> chord_of_seg_;  // (input,strand,seg)->chord
  std::map<std::tuple<int, int, int>, int> epnode_;        // (input,strand,k)->node
  std::map<int, std::pair<int, int>> star_corner_;         // vertex edge dart -> corner
  std::vector<int> tri_blen_;                              // boundary items per triangle
  std::vector<std::vector<int>> edart_;                    // per edge: fwd interval darts
  std::vector<int> rot_pos_;                               // dart -> index in its rotation
  std::map<std::pair<int, long long>, std::pair<int, int>> corner_of_key_;

  void normalize_positions();
  void build_nodes_chords();
  void build_crossings();
  void build_darts();
  void build_faces();
  long long boundary_key(int tri, int side_or_corner, bool corner, const Rat& t,
                         int subrank) const;
};

// helpers shared with drivers
MultiCurve curve_from_strands(const Triangulation& T, std::vector<Strand> strands,
                              int* dropped = nullptr);
void tighten(const Triangulation& T, Strand& s, bool* dropped_trivial);
// minimal position of mover against a fixed obstacle system; both returned
// re-normalized on a common position scale
struct MinPos {
  Embedded mover, obstacle;
  int crossings = 0;
};
MinPos minimal_pair(const Triangulation& T, Embedded mover, Embedded obstacle,
                    bool to_zero);
// simultaneously disjoint realization of pairwise disjoint systems
std::vector<Embedded> realize_disjoint(const Triangulation& T,
                                       std::vector<Embedded> systems);
void canonicalize_positions(const Triangulation& T, std::vector<Strand>& strands);
std::vector<int> weights_of(const Triangulation& T, const std::vector<Strand>& strands);

}  // namespace ov
}  // namespace multisec
