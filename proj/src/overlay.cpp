#include "overlay_internal.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace multisec {
namespace ov {

namespace {

int ccw_dist(int len, int from, int to) {
  int d = (to - from) % len;
  return d < 0 ? d + len : d;
}

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

Ov::Ov(const Triangulation& T, std::vector<Embedded> inputs)
    : T_(&T), ins_(std::move(inputs)) {
  for (auto& e : ins_) {
    if (e.T != T_) throw std::logic_error("overlay: inputs on different triangulations");
    for (auto& s : e.strands)
      if (s.closed && s.xs.empty())
        throw std::logic_error("overlay: closed strand with no crossings");
  }
  normalize_positions();
  build_nodes_chords();
  build_crossings();
  build_darts();
  build_faces();
}

void Ov::normalize_positions() {
  epts_.assign(T_->num_edges(), {});
  for (int i = 0; i < (int)ins_.size(); ++i)
    for (int s = 0; s < (int)ins_[i].strands.size(); ++s) {
      const Strand& st = ins_[i].strands[s];
      for (int k = 0; k < st.size(); ++k)
        epts_[st.xs[k].edge].push_back({i, s, k, st.xs[k].t, -1});
    }
  for (int e = 0; e < T_->num_edges(); ++e) {
    auto& v = epts_[e];
    std::stable_sort(v.begin(), v.end(), [](const EdgePointRec& a, const EdgePointRec& b) {
      if (a.t != b.t) return a.t < b.t;
      return std::tie(a.input, a.strand, a.k) < std::tie(b.input, b.strand, b.k);
    });
    int m = (int)v.size();
    for (int r = 0; r < m; ++r) {
      v[r].t = Rat(r + 1, m + 1);
      ins_[v[r].input].strands[v[r].strand].xs[v[r].k].t = v[r].t;
    }
  }
}

void Ov::build_nodes_chords() {
  nodes_.clear();
  for (int v = 0; v < T_->num_vertices(); ++v) {
    Node n;
    n.kind = NodeKind::Vertex;
    n.vertex = v;
    nodes_.push_back(n);
  }
  for (int e = 0; e < T_->num_edges(); ++e)
    for (int r = 0; r < (int)epts_[e].size(); ++r) {
      auto& rec = epts_[e][r];
      Node n;
      n.kind = NodeKind::EdgePoint;
      n.edge = e;
      n.ep_index = r;
      rec.node = (int)nodes_.size();
      epnode_[{rec.input, rec.strand, rec.k}] = rec.node;
      nodes_.push_back(n);
    }

  // chord ends with boundary descriptors
  struct End {
    bool corner = false;
    int side = -1;       // triangle side for edge-point ends
    int corner_idx = -1; // corner for corner ends
    int ep_rank = -1;    // rank on the side, from the side's start corner
    int sub = 0;
    long long key = -1;
  };
  struct Build {
    End a, b;
  };
  std::vector<Build> ends;

  auto side_rank = [&](int tri, int side, int ep_index) {
    int m = (int)epts_[T_->tris[tri].edge[side]].size();
    return T_->side_forward(tri, side) ? ep_index : m - 1 - ep_index;
  };

  chords_.clear();
  for (int i = 0; i < (int)ins_.size(); ++i)
    for (int s = 0; s < (int)ins_[i].strands.size(); ++s) {
      const Strand& st = ins_[i].strands[s];
      int nseg = st.closed ? st.size() : st.size() + 1;
      for (int seg = 0; seg < nseg; ++seg) {
        Chord ch;
        ch.input = i;
        ch.strand = s;
        ch.seg = seg;
        ch.tri = segment_tri(*T_, st, seg);
        Build bd;
        // start end: closed segments begin at xs[seg], arc segment s at xs[s-1]
        if (!st.closed && seg == 0) {
          bd.a.corner = true;
          bd.a.corner_idx = st.corner_start;
          ch.node_a = st.v_start;
        } else {
          int k = st.closed ? seg : seg - 1;
          const Crossing& xs0 = st.xs[k];
          auto sl = T_->edges[xs0.edge].slot[xs0.out];
          if (sl.first != ch.tri) throw std::logic_error("overlay: segment slot mismatch");
          bd.a.side = sl.second;
          int node = epnode_.at({i, s, k});
          bd.a.ep_rank = side_rank(ch.tri, sl.second, nodes_[node].ep_index);
          ch.node_a = node;
        }
        if (!st.closed && seg == nseg - 1) {
          bd.b.corner = true;
          bd.b.corner_idx = st.corner_end;
          ch.node_b = st.v_end;
        } else {
          int k = st.closed ? (seg + 1) % st.size() : seg;
          const Crossing& x1 = st.xs[k];
          auto sl = T_->edges[x1.edge].slot[1 - x1.out];
          if (sl.first != ch.tri) throw std::logic_error("overlay: segment slot mismatch");
          bd.b.side = sl.second;
          int node = epnode_.at({i, s, k});
          bd.b.ep_rank = side_rank(ch.tri, sl.second, nodes_[node].ep_index);
          ch.node_b = node;
        }
        chord_of_seg_[{i, s, seg}] = (int)chords_.size();
        chords_.push_back(ch);
        ends.push_back(bd);
      }
    }

  // provisional cyclic keys for corner-subrank assignment
  int maxpts = 1;
  for (auto& v : epts_) maxpts = std::max(maxpts, (int)v.size());
  const long long SCALE = maxpts + 2;
  const long long L = 18 * SCALE;
  auto prov = [&](const End& e, int /*tri*/) -> long long {
    if (e.corner) return 6LL * e.corner_idx * SCALE;
    return (6LL * e.side + 3) * SCALE + e.ep_rank + 1;
  };

  // per (tri, corner): order ends by ccw distance of the far end, closest last
  std::map<std::pair<int, int>, std::vector<std::pair<int, bool>>> corner_ends;
  for (int c = 0; c < (int)chords_.size(); ++c) {
    if (ends[c].a.corner) corner_ends[{chords_[c].tri, ends[c].a.corner_idx}].push_back({c, true});
    if (ends[c].b.corner) corner_ends[{chords_[c].tri, ends[c].b.corner_idx}].push_back({c, false});
  }
  for (auto& [tc, list] : corner_ends) {
    long long here = 6LL * tc.second * SCALE;
    auto far_of = [&](std::pair<int, bool> e) -> const End& {
      return e.second ? ends[e.first].b : ends[e.first].a;
    };
    std::sort(list.begin(), list.end(), [&](auto x, auto y) {
      const End& fx = far_of(x);
      const End& fy = far_of(y);
      long long dx = ((prov(fx, tc.first) - here) % L + L) % L;
      long long dy = ((prov(fy, tc.first) - here) % L + L) % L;
      if (dx != dy) return dx < dy;
      // tie: both far ends at the same corner (corner-to-corner chords between
      // the same corner pair); order so the two assignments are reversed,
      // making the chords parallel
      const Chord& cx = chords_[x.first];
      const Chord& cy = chords_[y.first];
      int id_here = 3 * tc.first + tc.second;
      int id_far = 3 * tc.first + fx.corner_idx;
      bool asc = id_here < id_far;
      auto kx = std::tie(cx.input, cx.strand, cx.seg);
      auto ky = std::tie(cy.input, cy.strand, cy.seg);
      return asc ? kx < ky : ky < kx;
    });
    int n = (int)list.size();
    for (int idx = 0; idx < n; ++idx) {
      End& e = list[idx].second ? ends[list[idx].first].a : ends[list[idx].first].b;
      e.sub = n - idx;  // ccw-closest far end gets the highest subrank
    }
  }

  // final boundary keys: list index in the ccw boundary order of each triangle
  tri_blen_.assign(T_->num_tris(), 0);
  corner_of_key_.clear();
  for (int t = 0; t < T_->num_tris(); ++t) {
    // corner c ends (subrank ascending), then side c points (side-local order)
    std::map<std::pair<int, int>, long long> keys;  // (corner,sub) or (3+side,rank)
    long long idx = 0;
    for (int c = 0; c < 3; ++c) {
      auto it = corner_ends.find({t, c});
      int cnt = it == corner_ends.end() ? 0 : (int)it->second.size();
      for (int sub = 1; sub <= cnt; ++sub) {
        corner_of_key_[{t, idx}] = {t, c};
        keys[{c, sub}] = idx++;
      }
      int m = (int)epts_[T_->tris[t].edge[c]].size();
      for (int r = 0; r < m; ++r) keys[{3 + c, r}] = idx++;
    }
    tri_blen_[t] = (int)idx;
    for (int c = 0; c < (int)chords_.size(); ++c) {
      if (chords_[c].tri != t) continue;
      auto fin = [&](const End& e) -> long long {
        if (e.corner) return keys.at({e.corner_idx, e.sub});
        return keys.at({3 + e.side, e.ep_rank});
      };
      chords_[c].key_a = fin(ends[c].a);
      chords_[c].key_b = fin(ends[c].b);
    }
  }
}

void Ov::build_crossings() {
  std::vector<std::vector<int>> by_tri(T_->num_tris());
  for (int c = 0; c < (int)chords_.size(); ++c) by_tri[chords_[c].tri].push_back(c);

  for (int t = 0; t < T_->num_tris(); ++t) {
    int L = tri_blen_[t];
    auto inside = [&](long long x, long long a, long long b) {
      return ccw_dist(L, (int)a, (int)x) < ccw_dist(L, (int)a, (int)b) && x != a;
    };
    auto& cs = by_tri[t];
    for (int i = 0; i < (int)cs.size(); ++i)
      for (int j = i + 1; j < (int)cs.size(); ++j) {
        Chord& ca = chords_[cs[i]];
        Chord& cb = chords_[cs[j]];
        bool x1 = inside(cb.key_a, ca.key_a, ca.key_b);
        bool x2 = inside(cb.key_b, ca.key_a, ca.key_b);
        if (x1 == x2) continue;
        if (ca.input == cb.input)
          throw std::logic_error("overlay: self-crossing within one input system");
        Node n;
        n.kind = NodeKind::Cross;
        n.chord_a = cs[i];
        n.chord_b = cs[j];
        // +1 if, ccw from a's forward end, b's forward end comes before b's
        // backward end (positively oriented frame)
        n.sign = ccw_dist(L, (int)ca.key_b, (int)cb.key_b) <
                         ccw_dist(L, (int)ca.key_b, (int)cb.key_a)
                     ? 1
                     : -1;
        int id = (int)nodes_.size();
        nodes_.push_back(n);
        ca.cross_nodes.push_back(id);
        cb.cross_nodes.push_back(id);
      }
  }
  // order crossings along each chord by the crosser end inside (key_a, key_b)
  for (auto& ch : chords_) {
    int L = tri_blen_[ch.tri];
    auto pos = [&](int node) {
      const Node& n = nodes_[node];
      const Chord& other = &chords_[n.chord_a] == &ch ? chords_[n.chord_b] : chords_[n.chord_a];
      int lim = ccw_dist(L, (int)ch.key_a, (int)ch.key_b);
      int da = ccw_dist(L, (int)ch.key_a, (int)other.key_a);
      int db = ccw_dist(L, (int)ch.key_a, (int)other.key_b);
      bool a_in = da < lim && other.key_a != ch.key_a;
      bool b_in = db < lim && other.key_b != ch.key_a;
      if (a_in == b_in) throw std::logic_error("overlay: crossing order inconsistency");
      return a_in ? da : db;
    };
    std::sort(ch.cross_nodes.begin(), ch.cross_nodes.end(),
              [&](int x, int y) { return pos(x) < pos(y); });
  }
}

void Ov::build_darts() {
  darts_.clear();
  auto add_pair = [&](int from, int to, CellKind kind, int owner, int piece, bool fwd) {
    Dart d1{from, to, (int)darts_.size() + 1, kind, owner, piece, fwd, -1};
    Dart d2{to, from, (int)darts_.size(), kind, owner, piece, !fwd, -1};
    darts_.push_back(d1);
    darts_.push_back(d2);
    return (int)darts_.size() - 2;
  };

  // edge intervals: stations [v0, points..., v1]
  edart_.assign(T_->num_edges(), {});
  for (int e = 0; e < T_->num_edges(); ++e) {
    std::vector<int> stations;
    stations.push_back(T_->edges[e].v0);
    for (auto& r : epts_[e]) stations.push_back(r.node);
    stations.push_back(T_->edges[e].v1);
    for (int i = 0; i + 1 < (int)stations.size(); ++i)
      edart_[e].push_back(add_pair(stations[i], stations[i + 1], CellKind::EdgeArc, e, i, true));
  }

  // chord pieces: stations [node_a, crossings..., node_b]
  for (int c = 0; c < (int)chords_.size(); ++c) {
    Chord& ch = chords_[c];
    std::vector<int> stations;
    stations.push_back(ch.node_a);
    for (int x : ch.cross_nodes) stations.push_back(x);
    stations.push_back(ch.node_b);
    ch.piece_darts.clear();
    for (int i = 0; i + 1 < (int)stations.size(); ++i)
      ch.piece_darts.push_back(
          add_pair(stations[i], stations[i + 1], CellKind::ChordSeg, c, i, true));
  }

  auto leave_a = [&](int c) { return chords_[c].piece_darts.front(); };
  auto leave_b = [&](int c) { return darts_[chords_[c].piece_darts.back()].twin; };

  rot_.assign(nodes_.size(), {});
  star_corner_.clear();

  // collect chord corner-ends per (tri, corner) with subranks for vertex wedges
  // (recomputed from keys: corner ends are the chords whose node is a vertex)
  std::map<std::pair<int, int>, std::vector<std::pair<long long, int>>> wedge;  // key->dart
  for (int c = 0; c < (int)chords_.size(); ++c) {
    const Chord& ch = chords_[c];
    if (nodes_[ch.node_a].kind == NodeKind::Vertex)
      wedge[corner_of_key_.at({ch.tri, ch.key_a})].push_back({ch.key_a, leave_a(c)});
    if (nodes_[ch.node_b].kind == NodeKind::Vertex)
      wedge[corner_of_key_.at({ch.tri, ch.key_b})].push_back({ch.key_b, leave_b(c)});
  }
  for (auto& [tc, v] : wedge) std::sort(v.begin(), v.end());

  // vertex rotations: star corners ccw; per corner the entering edge dart then
  // the corner's chord darts, highest subrank (latest boundary key) first
  for (int v = 0; v < T_->num_vertices(); ++v) {
    auto star = T_->vertex_star(v);
    for (auto [t, c] : star) {
      int e = T_->tris[t].edge[c];
      int d;
      if (T_->side_forward(t, c)) {
        if (T_->edges[e].v0 != v) throw std::logic_error("overlay: star orientation");
        d = edart_[e].front();
      } else {
        if (T_->edges[e].v1 != v) throw std::logic_error("overlay: star orientation");
        d = darts_[edart_[e].back()].twin;
      }
      rot_[v].push_back(d);
      star_corner_[d] = {t, c};
      auto it = wedge.find({t, c});
      if (it != wedge.end())
        for (auto rit = it->second.rbegin(); rit != it->second.rend(); ++rit)
          rot_[v].push_back(rit->second);
    }
  }

  // edge point rotations: [E+, chord-into-forward-slot-triangle, E-, other]
  for (int e = 0; e < T_->num_edges(); ++e) {
    int fwd_slot = T_->side_forward(T_->edges[e].slot[0].first, T_->edges[e].slot[0].second)
                       ? 0
                       : 1;
    for (int r = 0; r < (int)epts_[e].size(); ++r) {
      const EdgePointRec& rec = epts_[e][r];
      int node = rec.node;
      const Strand& st = ins_[rec.input].strands[rec.strand];
      const Crossing& x = st.xs[rec.k];
      // closed: crossing k starts segment k and ends segment k-1;
      // arc: crossing k ends segment k and starts segment k+1
      int seg_after = st.closed ? rec.k : rec.k + 1;
      int seg_before = st.closed ? (rec.k + st.size() - 1) % st.size() : rec.k;
      int ca = chord_of_seg_.at({rec.input, rec.strand, seg_after});
      int cb = chord_of_seg_.at({rec.input, rec.strand, seg_before});
      int d_after = chords_[ca].piece_darts.front();          // leaves its node_a
      int d_before = darts_[chords_[cb].piece_darts.back()].twin;  // leaves its node_b
      int eplus = edart_[e][r + 1];
      int eminus = darts_[edart_[e][r]].twin;
      int cl = (x.out == fwd_slot) ? d_after : d_before;
      int cr = (x.out == fwd_slot) ? d_before : d_after;
      rot_[node] = {eplus, cl, eminus, cr};
    }
  }

  // crossing rotations: the four rays sorted by target boundary key (ccw)
  for (int n = 0; n < (int)nodes_.size(); ++n) {
    if (nodes_[n].kind != NodeKind::Cross) continue;
    std::vector<std::pair<long long, int>> rays;
    for (int cid : {nodes_[n].chord_a, nodes_[n].chord_b}) {
      const Chord& ch = chords_[cid];
      int st = 0;
      while (ch.cross_nodes[st] != n) ++st;
      rays.push_back({ch.key_a, darts_[ch.piece_darts[st]].twin});
      rays.push_back({ch.key_b, ch.piece_darts[st + 1]});
    }
    std::sort(rays.begin(), rays.end());
    for (auto& [k, d] : rays) rot_[n].push_back(d);
  }

  rot_pos_.assign(darts_.size(), -1);
  for (int n = 0; n < (int)nodes_.size(); ++n)
    for (int i = 0; i < (int)rot_[n].size(); ++i) rot_pos_[rot_[n][i]] = i;
  for (int d = 0; d < (int)darts_.size(); ++d)
    if (rot_pos_[d] < 0) throw std::logic_error("overlay: dart missing from rotation");
}

void Ov::build_faces() {
  // left faces: phi(d) = rotation-predecessor of twin(d) at head(d)
  fnext_.assign(darts_.size(), -1);
  for (int d = 0; d < (int)darts_.size(); ++d) {
    int n = darts_[d].to;
    int tw = darts_[d].twin;
    const auto& r = rot_[n];
    int p = rot_pos_[tw];
    fnext_[d] = r[(p + (int)r.size() - 1) % r.size()];
  }
  nfaces_ = 0;
  for (int d = 0; d < (int)darts_.size(); ++d) {
    if (darts_[d].face >= 0) continue;
    int cur = d;
    do {
      darts_[cur].face = nfaces_;
      cur = fnext_[cur];
    } while (cur != d);
    ++nfaces_;
  }
  int euler = (int)nodes_.size() - (int)darts_.size() / 2 + nfaces_;
  if (euler != T_->euler_cell())
    throw std::logic_error("overlay: face tracing failed the Euler check");
}

int Ov::crossings_between(int i, int j) const {
  int c = 0;
  for (const Node& n : nodes_) {
    if (n.kind != NodeKind::Cross) continue;
    int a = chords_[n.chord_a].input, b = chords_[n.chord_b].input;
    if ((a == i && b == j) || (a == j && b == i)) ++c;
  }
  return c;
}

int Ov::algebraic_between(int i, int j) const {
  int s = 0;
  for (const Node& n : nodes_) {
    if (n.kind != NodeKind::Cross) continue;
    int a = chords_[n.chord_a].input, b = chords_[n.chord_b].input;
    if (a == i && b == j) s += n.sign;
    else if (a == j && b == i) s -= n.sign;
  }
  return s;
}

int Ov::dart_at_vertex(int v) const {
  return rot_[v].empty() ? -1 : rot_[v][0];
}

std::vector<int> Ov::left_scan(int d_in, int d_out) const {
  int n = darts_[d_in].to;
  if (darts_[d_out].from != n) throw std::logic_error("left_scan: dart mismatch");
  const auto& r = rot_[n];
  int stop = darts_[d_in].twin;
  std::vector<int> out;
  int p = rot_pos_[d_out];
  // d_out == twin(d_in) happens at a strand dead end: the wedge is then the
  // whole rotation around the node
  for (int i = 1; i <= (int)r.size(); ++i) {
    int d = r[(p + i) % r.size()];
    if (d == stop) return out;
    out.push_back(d);
  }
  throw std::logic_error("left_scan: twin not found");
}

std::pair<int, int> Ov::star_corner_after(int dart) const {
  auto it = star_corner_.find(dart);
  if (it == star_corner_.end()) throw std::logic_error("star_corner_after: not a star dart");
  return it->second;
}

Ov::Regions Ov::regions(const std::vector<int>& cut_inputs) const {
  std::vector<bool> is_cut_input(ins_.size(), false);
  for (int c : cut_inputs) is_cut_input[c] = true;
  std::vector<bool> cut(darts_.size(), false);
  for (int d = 0; d < (int)darts_.size(); ++d)
    if (darts_[d].kind == CellKind::ChordSeg && is_cut_input[chords_[darts_[d].owner].input])
      cut[d] = true;
  for (const Node& n : nodes_)
    if (n.kind == NodeKind::Cross) {
      bool a = is_cut_input[chords_[n.chord_a].input];
      bool b = is_cut_input[chords_[n.chord_b].input];
      if (a != b) throw std::logic_error("regions: non-cut strand crosses the cut set");
    }

  UF uf(nfaces_);
  for (int d = 0; d < (int)darts_.size(); d += 2)
    if (!cut[d]) uf.unite(darts_[d].face, darts_[d + 1].face);

  Regions out;
  out.face_region.assign(nfaces_, -1);
  std::map<int, int> id;
  for (int f = 0; f < nfaces_; ++f) {
    int r = uf.find(f);
    auto [it, fresh] = id.try_emplace(r, (int)id.size());
    out.face_region[f] = it->second;
  }
  int R = (int)id.size();

  std::vector<int> F(R, 0), Ei(R, 0), Vi(R, 0), Bd(R, 0);
  for (int f = 0; f < nfaces_; ++f) ++F[out.face_region[f]];
  for (int d = 0; d < (int)darts_.size(); d += 2)
    if (!cut[d]) ++Ei[out.face_region[darts_[d].face]];

  std::vector<bool> node_cut(nodes_.size(), false);
  for (int d = 0; d < (int)darts_.size(); ++d)
    if (cut[d]) node_cut[darts_[d].from] = true;

  out.comps.assign(R, {});
  std::vector<int> node_region(nodes_.size(), -1);
  for (int n = 0; n < (int)nodes_.size(); ++n) {
    if (rot_[n].empty()) throw std::logic_error("regions: isolated node");
    node_region[n] = out.face_region[darts_[rot_[n][0]].face];
    if (node_cut[n]) continue;
    int r = node_region[n];
    ++Vi[r];
    if (nodes_[n].kind == NodeKind::Vertex) {
      if (T_->puncture[nodes_[n].vertex]) {
        ++out.comps[r].punctures;
        out.comps[r].puncture_vertices.push_back(nodes_[n].vertex);
      } else {
        out.comps[r].has_aux = true;
      }
    }
  }

  // boundary walks: contour tracing along cut darts
  std::vector<bool> seen(darts_.size(), false);
  for (int d = 0; d < (int)darts_.size(); ++d) {
    if (!cut[d] || seen[d]) continue;
    std::vector<int> walk;
    int cur = d;
    do {
      seen[cur] = true;
      walk.push_back(cur);
      int e = fnext_[cur];
      while (!cut[e]) e = fnext_[darts_[e].twin];
      cur = e;
    } while (cur != d);
    int r = out.face_region[darts_[d].face];
    ++Bd[r];
    out.walk_region.push_back(r);
    out.walks.push_back(std::move(walk));
  }

  for (int r = 0; r < R; ++r) {
    int chi = F[r] - Ei[r] + Vi[r];
    int g2 = 2 - chi - Bd[r];
    if (g2 < 0 || g2 % 2 != 0) throw std::logic_error("regions: bad component genus");
    out.comps[r].genus = g2 / 2;
    out.comps[r].boundaries = Bd[r];
    std::sort(out.comps[r].puncture_vertices.begin(), out.comps[r].puncture_vertices.end());
  }
  return out;
}

int Ov::region_of_vertex(const Regions& r, int v) const {
  return r.face_region[darts_[rot_[v][0]].face];
}

int Ov::region_of_strand(const Regions& r, int input, int strand) const {
  int c = chord_of_seg_.at({input, strand, 0});
  return r.face_region[darts_[chords_[c].piece_darts[0]].face];
}

std::optional<Ov::BigonDesc> Ov::find_bigon(int i, int j, bool allow_aux) {
  Regions rg = regions({i, j});
  for (int w = 0; w < (int)rg.walks.size(); ++w) {
    int r = rg.walk_region[w];
    const CutComponent& c = rg.comps[r];
    if (c.genus != 0 || c.boundaries != 1 || c.punctures != 0) continue;
    if (c.has_aux && !allow_aux) continue;
    const auto& walk = rg.walks[w];
    int n = (int)walk.size();
    // corner events: the node between consecutive darts
    std::vector<int> corners;  // walk positions whose *end node* is a corner
    bool ok = true;
    for (int p = 0; p < n; ++p) {
      int node = darts_[walk[p]].to;
      if (nodes_[node].kind == NodeKind::Cross) corners.push_back(p);
      else if (nodes_[node].kind == NodeKind::Vertex) corners.push_back(p);
    }
    if (corners.size() != 2) continue;
    int na = darts_[walk[corners[0]]].to;
    int nb = darts_[walk[corners[1]]].to;
    if (na == nb) continue;
    bool ha = nodes_[na].kind == NodeKind::Vertex;
    bool hb = nodes_[nb].kind == NodeKind::Vertex;
    if (ha && hb) continue;  // no crossing to remove
    // two runs: (corners[0], corners[1]] and (corners[1], corners[0]]
    auto run_input = [&](int from, int to) {
      int inp = -1;
      for (int p = (from + 1) % n; ; p = (p + 1) % n) {
        int d = walk[p];
        int inp2 = chords_[darts_[d].owner].input;
        if (inp == -1) inp = inp2;
        else if (inp != inp2) return -2;
        if (p == to) break;
      }
      return inp;
    };
    int in1 = run_input(corners[0], corners[1]);
    int in2 = run_input(corners[1], corners[0]);
    if (in1 < 0 || in2 < 0 || in1 == in2) { ok = false; }
    if (!ok) continue;
    if (!((in1 == i && in2 == j) || (in1 == j && in2 == i))) continue;
    BigonDesc bg;
    bg.input_i = i;
    bg.input_j = j;
    // orient: run_i is the i run; corner_a = crossing corner preceding run_i
    auto collect = [&](int from, int to) {
      std::vector<int> v;
      for (int p = (from + 1) % n; ; p = (p + 1) % n) {
        v.push_back(walk[p]);
        if (p == to) break;
      }
      return v;
    };
    if (in1 == i) {
      bg.run_i = collect(corners[0], corners[1]);
      bg.run_j = collect(corners[1], corners[0]);
      bg.corner_a = na;
      bg.corner_b = nb;
    } else {
      bg.run_i = collect(corners[1], corners[0]);
      bg.run_j = collect(corners[0], corners[1]);
      bg.corner_a = nb;
      bg.corner_b = na;
    }
    bg.half = nodes_[bg.corner_a].kind == NodeKind::Vertex ||
              nodes_[bg.corner_b].kind == NodeKind::Vertex;
    // for half bigons put the vertex at corner_b by flipping the walk reading:
    // corner_a precedes run_i in walk order; if corner_a is the vertex, the
    // crossing is corner_b and the runs both end at the vertex.  Rerouting
    // only needs the runs and the vertex, handled there.
    return bg;
  }
  return std::nullopt;
}

Embedded Ov::reroute(const BigonDesc& bg) const {
  Embedded out = ins_[bg.input_i];

  // i's travel direction along its run
  bool i_fwd = darts_[bg.run_i[0]].fwd;
  int i_strand = chords_[darts_[bg.run_i[0]].owner].strand;

  // i's edge crossings strictly inside the run (to-nodes of all but the last)
  std::vector<int> removed;  // crossing indices k on strand i
  for (int p = 0; p + 1 < (int)bg.run_i.size(); ++p) {
    int node = darts_[bg.run_i[p]].to;
    if (nodes_[node].kind != NodeKind::EdgePoint) continue;
    const EdgePointRec& rec = epts_[nodes_[node].edge][nodes_[node].ep_index];
    if (rec.input != bg.input_i || rec.strand != i_strand)
      throw std::logic_error("reroute: stray node inside i run");
    removed.push_back(rec.k);
  }

  // live edge position tables
  std::vector<std::vector<Rat>> table(T_->num_edges());
  for (int e = 0; e < T_->num_edges(); ++e)
    for (auto& r : epts_[e]) table[e].push_back(r.t);

  auto place = [&](int e, const Rat& anchor, bool up) -> Rat {
    auto& v = table[e];
    auto it = std::lower_bound(v.begin(), v.end(), anchor);
    if (it == v.end() || *it != anchor) throw std::logic_error("reroute: anchor missing");
    Rat nb = up ? (std::next(it) == v.end() ? Rat(1, 1) : *std::next(it))
                : (it == v.begin() ? Rat(0, 1) : *std::prev(it));
    Rat t = mid(anchor, nb);
    v.push_back(t);
    std::sort(v.begin(), v.end());
    return t;
  };

  // new crossings parallel to the j run, walk order (corner_b -> corner_a side)
  struct NewX { int edge; int out; Rat t; };
  std::vector<NewX> block;
  for (int p = 0; p < (int)bg.run_j.size(); ++p) {
    int node = darts_[bg.run_j[p]].to;
    if (p + 1 == (int)bg.run_j.size()) break;  // final node is a corner
    if (nodes_[node].kind == NodeKind::Cross) throw std::logic_error("reroute: corner in run");
    if (nodes_[node].kind != NodeKind::EdgePoint) throw std::logic_error("reroute: bad run node");
    const EdgePointRec& rec = epts_[nodes_[node].edge][nodes_[node].ep_index];
    const Crossing& jx = ins_[rec.input].strands[rec.strand].xs[rec.k];
    int d_in = bg.run_j[p];
    int d_out = bg.run_j[p + 1];
    // offset to the walk-right (non-region) side: the single edge dart in the
    // ccw wedge scan from twin(d_in) to d_out
    int eps = -1;
    for (int d : left_scan(darts_[d_out].twin, darts_[d_in].twin))
      if (darts_[d].kind == CellKind::EdgeArc) { eps = d; break; }
    if (eps < 0) throw std::logic_error("reroute: no edge dart on the off side");
    bool up = darts_[eps].fwd;  // toward larger t
    Rat t = place(nodes_[node].edge, jx.t, up);
    // walk-direction out slot; the whole block is flipped below if the new
    // path runs against the walk
    int out_walk = darts_[d_in].fwd ? jx.out : 1 - jx.out;
    block.push_back({nodes_[node].edge, out_walk, t});
  }
  // new path direction: i travels run_i in walk direction iff i_fwd; the walk
  // goes corner_a -> run_i -> corner_b -> run_j -> corner_a, so when i_fwd the
  // replacement must run corner_a -> corner_b: reverse the j-run block
  if (i_fwd) {
    std::reverse(block.begin(), block.end());
    for (auto& x : block) x.out = 1 - x.out;
  }

  Strand& s = out.strands[i_strand];
  if (s.closed) {
    if (removed.empty()) {
      // the run is a single chord: segment seg spans xs[seg] -> xs[seg+1]
      int c0 = darts_[bg.run_i[0]].owner;
      int seg = chords_[c0].seg;
      int at = (seg + 1) % (int)s.xs.size();
      std::vector<Crossing> xs;
      for (int k = 0; k < (int)s.xs.size(); ++k) {
        if (k == at)
          for (auto& b : block) xs.push_back({b.edge, b.out, b.t});
        xs.push_back(s.xs[k]);
      }
      if (at == (int)s.xs.size())
        for (auto& b : block) xs.push_back({b.edge, b.out, b.t});
      s.xs = xs;
    } else {
      // contiguous cyclic block: rebuild starting after it
      std::vector<bool> rm(s.xs.size(), false);
      for (int k : removed) rm[k] = true;
      int start = -1;
      for (int k = 0; k < (int)s.xs.size(); ++k) {
        int prev = (k + (int)s.xs.size() - 1) % (int)s.xs.size();
        if (!rm[k] && rm[prev]) { start = k; break; }
      }
      std::vector<Crossing> xs;
      if (start < 0) {
        // the run swallows every crossing: the strand becomes a parallel copy
        // of the j side alone (possibly a trivial loop, dropped downstream)
        for (auto& b : block) xs.push_back({b.edge, b.out, b.t});
      } else {
        for (int q = 0; q < (int)s.xs.size(); ++q) {
          int k = (start + q) % (int)s.xs.size();
          if (!rm[k]) xs.push_back(s.xs[k]);
        }
        // the removed block sat just before `start` in travel order; the new
        // block goes at the end (i.e. immediately before xs[0] cyclically)
        for (auto& b : block) xs.push_back({b.edge, b.out, b.t});
      }
      s.xs = xs;
    }
  } else {
    // arc: removed crossings form a contiguous interval; half bigons reach an
    // endpoint, where the end corner is replaced by j's end corner
    std::vector<bool> rm(s.xs.size(), false);
    for (int k : removed) rm[k] = true;
    int lo = (int)s.xs.size();
    for (int k = 0; k < (int)s.xs.size(); ++k)
      if (rm[k]) { lo = std::min(lo, k); break; }

    int insert_at;
    bool at_start = false;
    if (!bg.half) {
      if (!removed.empty()) {
        insert_at = lo;
      } else {
        // single-chord run: arc segment s sits between xs[s-1] and xs[s]
        insert_at = chords_[darts_[bg.run_i[0]].owner].seg;
      }
    } else {
      // which end of i the run reaches: the i-chord touching the vertex is
      // segment 0 (start) or the last segment (end)
      int vd = -1;
      for (int d : bg.run_i) {
        int o = darts_[d].owner;
        if (nodes_[chords_[o].node_a].kind == NodeKind::Vertex ||
            nodes_[chords_[o].node_b].kind == NodeKind::Vertex)
          vd = d;
      }
      if (vd < 0) throw std::logic_error("reroute: half bigon without vertex chord");
      at_start = chords_[darts_[vd].owner].seg == 0;
      insert_at = at_start ? 0 : (int)s.xs.size();
    }

    std::vector<Crossing> xs;
    for (int k = 0; k < (int)s.xs.size(); ++k) {
      if (k == insert_at)
        for (auto& b : block) xs.push_back({b.edge, b.out, b.t});
      if (!rm[k]) xs.push_back(s.xs[k]);
    }
    if (insert_at >= (int)s.xs.size())
      for (auto& b : block) xs.push_back({b.edge, b.out, b.t});

    if (bg.half) {
      // new end corner: j's arc end adjacent to the shared vertex
      int vd = -1;
      for (int d : bg.run_j) {
        int o = darts_[d].owner;
        if (nodes_[chords_[o].node_a].kind == NodeKind::Vertex ||
            nodes_[chords_[o].node_b].kind == NodeKind::Vertex)
          vd = d;
      }
      if (vd < 0) throw std::logic_error("reroute: half bigon without vertex chord in j");
      const Chord& vch = chords_[darts_[vd].owner];
      const Strand& js = ins_[vch.input].strands[vch.strand];
      bool j_at_start = vch.seg == 0;
      int new_corner = j_at_start ? js.corner_start : js.corner_end;
      if (at_start) s.corner_start = new_corner;
      else s.corner_end = new_corner;
      if (xs.empty()) s.corner_tri = vch.tri;
    }
    s.xs = xs;
  }
  return out;
}

std::vector<std::pair<int, int>> Ov::trace_letters(int input, int strand) const {
  std::vector<std::pair<int, int>> out;
  const Strand& st = ins_[input].strands[strand];
  int nseg = st.closed ? st.size() : st.size() + 1;
  for (int seg = 0; seg < nseg; ++seg) {
    const Chord& ch = chords_[chord_of_seg_.at({input, strand, seg})];
    for (int node : ch.cross_nodes) {
      const Node& n = nodes_[node];
      bool we_are_a = chords_[n.chord_a].input == input && chords_[n.chord_a].strand == strand;
      int other = we_are_a ? chords_[n.chord_b].input : chords_[n.chord_a].input;
      out.push_back({other, we_are_a ? n.sign : -n.sign});
    }
  }
  return out;
}

Embedded Ov::resolve_all() const {
  // stations per strand; cross nodes mapped to (input, strand, station index)
  struct Pos { int input, strand, station; };
  std::map<std::pair<int, int>, std::vector<int>> stations;  // (input,strand)->node list
  std::map<int, std::vector<Pos>> at_cross;
  for (int i = 0; i < (int)ins_.size(); ++i)
    for (int s = 0; s < (int)ins_[i].strands.size(); ++s) {
      const Strand& st = ins_[i].strands[s];
      if (!st.closed) throw std::logic_error("resolve_all: arcs unsupported");
      std::vector<int> sts;
      for (int seg = 0; seg < st.size(); ++seg) {
        sts.push_back(epnode_.at({i, s, seg}));
        const Chord& ch = chords_[chord_of_seg_.at({i, s, seg})];
        for (int x : ch.cross_nodes) sts.push_back(x);
      }
      for (int p = 0; p < (int)sts.size(); ++p)
        if (nodes_[sts[p]].kind == NodeKind::Cross)
          at_cross[sts[p]].push_back({i, s, p});
      stations[{i, s}] = std::move(sts);
    }

  Embedded out;
  out.T = T_;
  std::set<std::tuple<int, int, int>> visited;  // post-positions
  for (auto& [key, sts] : stations) {
    for (int p0 = 0; p0 < (int)sts.size(); ++p0) {
      if (visited.count({key.first, key.second, p0})) continue;
      Strand loop;
      loop.closed = true;
      int ci = key.first, cs = key.second, cp = p0;
      do {
        visited.insert({ci, cs, cp});
        const auto& cur = stations.at({ci, cs});
        int np = (cp + 1) % (int)cur.size();
        int node = cur[np];
        if (nodes_[node].kind == NodeKind::EdgePoint) {
          const EdgePointRec& rec = epts_[nodes_[node].edge][nodes_[node].ep_index];
          const Crossing& x = ins_[rec.input].strands[rec.strand].xs[rec.k];
          loop.xs.push_back(x);
          cp = np;
        } else {
          const auto& ps = at_cross.at(node);
          if (ps.size() != 2) throw std::logic_error("resolve_all: bad crossing");
          const Pos& other = (ps[0].input == ci && ps[0].strand == cs && ps[0].station == np)
                                 ? ps[1]
                                 : ps[0];
          ci = other.input;
          cs = other.strand;
          cp = other.station;
        }
      } while (!(ci == key.first && cs == key.second && cp == p0));
      if (!loop.xs.empty()) out.strands.push_back(std::move(loop));
    }
  }
  return out;
}

}  // namespace ov
}  // namespace multisec
