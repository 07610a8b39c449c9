#include "multisec/geom.hpp"

#include <algorithm>

namespace multisec {

void Triangulation::finalize() {
  for (auto& e : edges) e.slot = {{{-1, -1}, {-1, -1}}};
  for (int t = 0; t < num_tris(); ++t) {
    for (int s = 0; s < 3; ++s) {
      EdgeRec& e = edges[tris[t].edge[s]];
      if (e.slot[0].first == -1) e.slot[0] = {t, s};
      else if (e.slot[1].first == -1) e.slot[1] = {t, s};
      else throw std::logic_error("edge in more than two triangle sides");
    }
  }
  for (int i = 0; i < num_edges(); ++i) {
    const EdgeRec& e = edges[i];
    if (e.slot[0].first == -1 || e.slot[1].first == -1)
      throw std::logic_error("edge not in exactly two triangle sides");
    // coherent orientation: the two slots traverse the edge in opposite directions
    bool f0 = tris[e.slot[0].first].fwd[e.slot[0].second];
    bool f1 = tris[e.slot[1].first].fwd[e.slot[1].second];
    if (f0 == f1) throw std::logic_error("incoherently oriented gluing");
  }
  // side endpoints consistent with edge endpoints
  for (int t = 0; t < num_tris(); ++t) {
    const Triangle& tr = tris[t];
    for (int s = 0; s < 3; ++s) {
      const EdgeRec& e = edges[tr.edge[s]];
      int a = tr.v[s], b = tr.v[(s + 1) % 3];
      if (tr.fwd[s]) {
        if (a != e.v0 || b != e.v1) throw std::logic_error("side/edge vertex mismatch");
      } else {
        if (a != e.v1 || b != e.v0) throw std::logic_error("side/edge vertex mismatch");
      }
    }
  }
}

std::vector<std::pair<int, int>> Triangulation::vertex_star(int v) const {
  // walk corners around v: from corner (t,c), the next corner counterclockwise
  // is across side (c+2)%3 (the side ending at corner c).
  std::pair<int, int> start{-1, -1};
  for (int t = 0; t < num_tris() && start.first == -1; ++t)
    for (int c = 0; c < 3; ++c)
      if (tris[t].v[c] == v) { start = {t, c}; break; }
  if (start.first == -1) throw std::logic_error("vertex_star: vertex not found");
  std::vector<std::pair<int, int>> out;
  auto cur = start;
  do {
    out.push_back(cur);
    int t = cur.first, c = cur.second;
    // cross the side coming into corner c; gluings reverse direction, so the
    // head of our side lands on the tail corner of the glued side.
    int side = (c + 2) % 3;
    int sl = slot_index(t, side);
    auto other = edges[tris[t].edge[side]].slot[1 - sl];
    cur = {other.first, other.second};
    if (tris[cur.first].v[cur.second] != v)
      throw std::logic_error("vertex_star: broken gluing");
  } while (cur != start && (int)out.size() <= 6 * num_tris());
  if (cur != start) throw std::logic_error("vertex_star: walk did not close");
  return out;
}

}  // namespace multisec
