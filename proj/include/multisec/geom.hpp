#pragma once

// Combinatorial scaffold: exact rationals for edge positions, triangulated
// surfaces with oriented triangle sides, and embedded curve/arc strands.
// Everything is integer-exact; positions only matter up to order on each edge.

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace multisec {

struct Rat {
  long long n = 0, d = 1;
  Rat() = default;
  Rat(long long num, long long den) : n(num), d(den) { normalize(); }
  static Rat of(long long num, long long den = 1) { return Rat(num, den); }
  void normalize() {
    if (d == 0) throw std::logic_error("Rat: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
  }
  friend bool operator==(const Rat& a, const Rat& b) { return a.n == b.n && a.d == b.d; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.n * b.d < (__int128)b.n * a.d;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }
  friend Rat mid(const Rat& a, const Rat& b) {
    // exact midpoint, kept reduced
    __int128 num = (__int128)a.n * b.d + (__int128)b.n * a.d;
    __int128 den = (__int128)2 * a.d * b.d;
    __int128 g = gcd128(num < 0 ? -num : num, den);
    num /= g; den /= g;
    if (num > INT64_MAX || den > INT64_MAX)
      throw std::overflow_error("Rat::mid overflow; positions need renormalizing");
    return Rat((long long)num, (long long)den);
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b) { __int128 t = a % b; a = b; b = t; }
    return a ? a : 1;
  }
};

struct Triangle {
  // side i runs from corner i to corner (i+1)%3; v[i] is the vertex at corner i
  std::array<int, 3> edge{};
  std::array<bool, 3> fwd{};  // side direction equals the edge's v0->v1 direction
  std::array<int, 3> v{};
};

struct EdgeRec {
  int v0 = -1, v1 = -1;
  // the two (triangle, side) slots incident to this edge, filled by finalize()
  std::array<std::pair<int, int>, 2> slot{{{-1, -1}, {-1, -1}}};
};

class Triangulation {
 public:
  int genus = 0;
  int punctures = 0;  // number of real puncture vertices
  std::vector<bool> puncture;  // per vertex; aux vertices are false
  std::vector<EdgeRec> edges;
  std::vector<Triangle> tris;

  int num_vertices() const { return (int)puncture.size(); }
  int num_edges() const { return (int)edges.size(); }
  int num_tris() const { return (int)tris.size(); }

  int euler_cell() const { return num_vertices() - num_edges() + num_tris(); }

  // slot index (0 or 1) of (tri, side) on its edge
  int slot_index(int tri, int side) const {
    const EdgeRec& e = edges[tris[tri].edge[side]];
    if (e.slot[0] == std::make_pair(tri, side)) return 0;
    if (e.slot[1] == std::make_pair(tri, side)) return 1;
    throw std::logic_error("slot_index: slot not registered");
  }

  // fills edge slots, checks two-slot coverage and coherent orientation
  void finalize();

  // corners around a vertex in rotational order: list of (tri, corner)
  // starting from an arbitrary deterministic corner
  std::vector<std::pair<int, int>> vertex_star(int v) const;

  // side local coordinate of an edge point seen from (tri, side):
  // s = t if fwd else 1 - t.  Used for boundary ordering only.
  bool side_forward(int tri, int side) const { return tris[tri].fwd[side]; }
};

// One embedded loop or properly-embedded arc, as a travel-ordered crossing
// sequence.  xs[i].out is the slot index (into EdgeRec::slot) that the strand
// exits into after the crossing, i.e. the triangle of the following segment.
struct Crossing {
  int edge = -1;
  int out = -1;
  Rat t;
};

struct Strand {
  bool closed = true;
  int v_start = -1, v_end = -1;  // arcs only
  // arcs: corner index of v_start in the first segment's triangle and of v_end
  // in the last segment's triangle; corner_tri is that triangle when xs is empty
  int corner_tri = -1;
  int corner_start = -1, corner_end = -1;
  std::vector<Crossing> xs;

  bool is_arc() const { return !closed; }
  int size() const { return (int)xs.size(); }
};

struct Embedded {
  const Triangulation* T = nullptr;
  std::vector<Strand> strands;
};

// segment i of a closed strand joins xs[i] to xs[(i+1)%n]; for an arc with n
// crossings there are n+1 segments, segment 0 starting at v_start.
// Triangle of a segment:
inline int segment_tri(const Triangulation& T, const Strand& s, int seg) {
  if (s.closed) {
    const Crossing& a = s.xs[seg % s.xs.size()];
    return T.edges[a.edge].slot[a.out].first;
  }
  if (s.xs.empty()) return s.corner_tri;
  if (seg == 0) {
    const Crossing& b = s.xs[0];
    return T.edges[b.edge].slot[1 - b.out].first;
  }
  const Crossing& a = s.xs[seg - 1];
  return T.edges[a.edge].slot[a.out].first;
}

}  // namespace multisec
