#include "multisec/curves.hpp"

#include "overlay_internal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace multisec {

using ov::Ov;

namespace {

Embedded arc_emb(const Triangulation& T, const Arc& a) {
  Embedded e;
  e.T = &T;
  e.strands = {a.strand()};
  return e;
}

// like realize_disjoint but the systems may cross: each is put in minimal
// position against the union of its predecessors
std::vector<Embedded> fold_minimal(const Triangulation& T, std::vector<Embedded> systems) {
  if (systems.size() <= 1) return systems;
  Embedded obstacle = systems[0];
  std::vector<int> owner(obstacle.strands.size(), 0);
  for (int k = 1; k < (int)systems.size(); ++k) {
    ov::MinPos r = ov::minimal_pair(T, systems[k], obstacle, false);
    obstacle = std::move(r.obstacle);
    for (const Strand& s : r.mover.strands) {
      obstacle.strands.push_back(s);
      owner.push_back(k);
    }
  }
  std::vector<Embedded> out(systems.size());
  for (auto& e : out) e.T = &T;
  for (int i = 0; i < (int)obstacle.strands.size(); ++i)
    out[owner[i]].strands.push_back(obstacle.strands[i]);
  return out;
}

}  // namespace

namespace {

// T^n along one connected curve, by the annulus model: inside a neighborhood
// of `a`, every strand crossing it is replaced by a spiral of slope n.
// Spirals sit at distinct angles of the annulus, so they stay disjoint no
// matter how the crossing signs with a are distributed. Works for closed
// strands and arcs alike.
Embedded twist_emb(const Triangulation& T, Embedded csys, const MultiCurve& a, int power) {
  ov::MinPos mp = ov::minimal_pair(T, std::move(csys), a.embedding(), false);
  if (mp.crossings == 0) return mp.mover;
  Ov ov(T, {mp.mover, mp.obstacle});
  const Embedded& cs = ov.inputs()[0];
  const Embedded& as = ov.inputs()[1];
  if (as.strands.size() != 1 || !as.strands[0].closed)
    throw std::invalid_argument("twist_emb: need one closed twisting curve");
  const Strand& astr = as.strands[0];
  long long L = astr.size();
  if (L == 0) return cs;
  long long N = std::abs((long long)power);
  int D = power > 0 ? 1 : -1;  // slope direction of the spiral along a

  // position scale shared by both systems: rank on the edge
  std::map<const Crossing*, long long> rank;
  std::vector<long long> mcount(T.num_edges(), 0);
  {
    std::vector<std::vector<std::pair<Rat, const Crossing*>>> per(T.num_edges());
    for (const Embedded* sys : {&cs, &as})
      for (const Strand& s : sys->strands)
        for (const Crossing& x : s.xs) per[x.edge].push_back({x.t, &x});
    for (int e = 0; e < T.num_edges(); ++e) {
      std::sort(per[e].begin(), per[e].end(),
                [](auto& p, auto& q) { return p.first < q.first; });
      mcount[e] = (long long)per[e].size();
      for (int r = 0; r < (int)per[e].size(); ++r) rank[per[e][r].second] = r;
    }
  }
  // depth axis: r = 1 is the left of a's travel; in edge coordinates left of
  // the strand entering its exit triangle is minus the crossed side direction
  std::vector<int> sdir(L);
  for (int i = 0; i < L; ++i) {
    auto sl = T.edges[astr.xs[i].edge].slot[astr.xs[i].out];
    sdir[i] = T.side_forward(sl.first, sl.second) ? -1 : 1;
  }

  // per crossing node: a-segment, order along that a-chord, and whether the
  // mover passes from the right of a to its left
  struct Hit {
    int aseg;
    long long idx, cnt;
    bool upward;
  };
  std::map<int, Hit> hits;
  for (const ov::Chord& ch : ov.chords()) {
    if (ch.input != 1) continue;
    long long cnt = (long long)ch.cross_nodes.size();
    for (int q = 0; q < (int)ch.cross_nodes.size(); ++q) {
      int nd = ch.cross_nodes[q];
      const ov::Node& node = ov.nodes()[nd];
      bool a_is_first = ov.chords()[node.chord_a].input == 1;
      bool upward = a_is_first ? node.sign == 1 : node.sign == -1;
      hits[nd] = {ch.seg, (long long)q, cnt, upward};
    }
  }

  Embedded out;
  out.T = &T;
  for (int si = 0; si < (int)cs.strands.size(); ++si) {
    const Strand& s = cs.strands[si];
    Strand ns = s;  // keeps the corner/endpoint data of arcs
    ns.xs.clear();
    int len = s.size();
    auto emit_chord = [&](int seg) {
      const ov::Chord* ch = nullptr;
      for (const ov::Chord& cand : ov.chords())
        if (cand.input == 0 && cand.strand == si && cand.seg == seg) ch = &cand;
      if (!ch) throw std::logic_error("twist_emb: chord lookup failed");
      for (int nd : ch->cross_nodes) {
        auto hit = hits.find(nd);
        if (hit == hits.end()) continue;  // crossing with another mover strand
        const Hit& h = hit->second;
        // spiral emissions at integer angles theta, t = 1..N*L steps from the
        // entry end; D=+1 walks along a, D=-1 against it
        std::vector<Crossing> coil;
        for (long long t = 1; t <= N * L; ++t) {
          long long aidx = D > 0 ? (h.aseg + t) % L : ((h.aseg + 1 - t) % L + L) % L;
          const Crossing& ax = astr.xs[aidx];
          long long g = D > 0 ? h.idx + 1 : h.cnt - h.idx;
          long long cp1 = h.cnt + 1;
          long long den_r = 2 * N * L * cp1;
          long long num_r = 2 * (t * cp1 - g) - N * L * cp1;  // 2r - 1 scaled
          long long m1 = mcount[ax.edge] + 1;
          Rat pos((rank[&ax] + 1) * den_r + sdir[aidx] * num_r, m1 * den_r);
          int outslot = D > 0 ? ax.out : 1 - ax.out;
          coil.push_back({ax.edge, outslot, pos});
        }
        if (!h.upward) {
          std::reverse(coil.begin(), coil.end());
          for (Crossing& x : coil) x.out = 1 - x.out;
        }
        for (Crossing& x : coil) ns.xs.push_back(x);
      }
    };
    if (!s.closed) emit_chord(0);
    for (int k = 0; k < len; ++k) {
      ns.xs.push_back(s.xs[k]);
      emit_chord(s.closed ? k : k + 1);
    }
    out.strands.push_back(std::move(ns));
  }
  return out;
}

}  // namespace

MultiCurve dehn_twist(const MultiCurve& c, const MultiCurve& along, int power) {
  if (power == 0 || c.component_count() == 0 || along.component_count() == 0) return c;
  const Triangulation& T = *c.tri();
  if (along.tri() != &T) throw std::invalid_argument("dehn_twist: different surfaces");
  MultiCurve cur = c;
  // twists along the disjoint components commute; apply them one at a time
  for (const Strand& comp : along.embedding().strands) {
    MultiCurve a = MultiCurve::from_weights(T, ov::weights_of(T, {comp}));
    cur = MultiCurve::from_embedded(twist_emb(T, cur.embedding(), a, power));
  }
  return cur;
}

Arc dehn_twist(const Arc& a, const MultiCurve& along, int power) {
  if (power == 0 || along.component_count() == 0) return a;
  const Triangulation& T = *a.tri();
  if (along.tri() != &T) throw std::invalid_argument("dehn_twist: different surfaces");
  Embedded cur = arc_emb(T, a);
  for (const Strand& comp : along.embedding().strands) {
    MultiCurve tw = MultiCurve::from_weights(T, ov::weights_of(T, {comp}));
    cur = twist_emb(T, std::move(cur), tw, power);
  }
  if (cur.strands.size() != 1) throw std::logic_error("dehn_twist: arc lost");
  return Arc::from_strand(T, cur.strands[0]);
}

MultiCurve curve_from_hops(const Triangulation& T,
                           const std::vector<std::pair<int, int>>& hops) {
  std::vector<int> total(T.num_edges(), 0), seen(T.num_edges(), 0);
  for (auto& [e, out] : hops) ++total[e];
  Strand s;
  s.closed = true;
  for (auto& [e, out] : hops) {
    int r = seen[e]++;
    s.xs.push_back({e, out, Rat(r + 1, total[e] + 1)});
  }
  Embedded emb;
  emb.T = &T;
  emb.strands = {std::move(s)};
  return MultiCurve::from_embedded(std::move(emb));
}

MultiCurve vertex_link(const Triangulation& T, int v) {
  auto star = T.vertex_star(v);
  Strand s;
  s.closed = true;
  for (auto [t, c] : star) {
    int side = (c + 2) % 3;
    int e = T.tris[t].edge[side];
    int out = 1 - T.slot_index(t, side);
    // the link crosses the side near its head corner, which is v
    Rat pos = T.side_forward(t, side) ? Rat(3, 4) : Rat(1, 4);
    s.xs.push_back({e, out, pos});
  }
  Embedded emb;
  emb.T = &T;
  emb.strands = {std::move(s)};
  return MultiCurve::from_embedded(std::move(emb));
}

namespace {

// live per-edge position table used while generating pushoff points
struct PlaceTable {
  std::vector<std::vector<Rat>> pts;
  explicit PlaceTable(int edges) : pts(edges) {}
  void seed(int e, const Rat& t) { insert(e, t); }
  void insert(int e, const Rat& t) {
    auto& v = pts[e];
    v.insert(std::upper_bound(v.begin(), v.end(), t), t);
  }
  // new point adjacent to anchor, on the increasing (up) or decreasing side
  Rat beside(int e, const Rat& anchor, bool up) {
    auto& v = pts[e];
    auto it = std::lower_bound(v.begin(), v.end(), anchor);
    if (it == v.end() || *it != anchor)
      throw std::logic_error("pushoff: anchor not in table");
    Rat nb = up ? (std::next(it) == v.end() ? Rat(1, 1) : *std::next(it))
                : (it == v.begin() ? Rat(0, 1) : *std::prev(it));
    Rat t = up ? mid(anchor, nb) : mid(nb, anchor);
    insert(e, t);
    return t;
  }
  // new point near an edge end (t=0 end if at0)
  Rat near_end(int e, bool at0) {
    auto& v = pts[e];
    Rat t = at0 ? mid(Rat(0, 1), v.empty() ? Rat(1, 1) : v.front())
                : mid(v.empty() ? Rat(0, 1) : v.back(), Rat(1, 1));
    insert(e, t);
    return t;
  }
};

}  // namespace

MultiCurve boundary_of_neighborhood(const Triangulation& T,
                                    const std::vector<MultiCurve>& curves,
                                    const std::vector<Arc>& arcs) {
  std::vector<Embedded> systems;
  for (const MultiCurve& c : curves)
    if (c.component_count() > 0) systems.push_back(c.embedding());
  for (const Arc& a : arcs) systems.push_back(arc_emb(T, a));
  if (systems.empty()) throw std::invalid_argument("boundary_of_neighborhood: empty union");
  systems = fold_minimal(T, systems);

  Ov ov(T, systems);
  std::vector<int> cut(systems.size());
  std::iota(cut.begin(), cut.end(), 0);
  auto rg = ov.regions(cut);

  PlaceTable table(T.num_edges());
  for (int e = 0; e < T.num_edges(); ++e)
    for (const auto& rec : ov.edge_points()[e]) table.seed(e, rec.t);

  // at most one arc end per vertex, or vertex pushoffs would collide
  for (int v = 0; v < T.num_vertices(); ++v) {
    int ends = 0;
    for (int d : ov.rotation(ov.node_of_vertex(v)))
      if (ov.darts()[d].kind == ov::CellKind::ChordSeg) ++ends;
    if (ends > 1)
      throw std::invalid_argument("boundary_of_neighborhood: several arc ends at a vertex");
  }

  Embedded result;
  result.T = &T;
  for (const auto& walk : rg.walks) {
    Strand s;
    s.closed = true;
    int n = (int)walk.size();
    for (int p = 0; p < n; ++p) {
      int d_in = walk[p], d_out = walk[(p + 1) % n];
      int node = ov.darts()[d_in].to;
      const ov::Node& nd = ov.nodes()[node];
      if (nd.kind == ov::NodeKind::Cross) continue;
      auto scan = ov.left_scan(d_in, d_out);
      if (nd.kind == ov::NodeKind::EdgePoint) {
        int e = nd.edge;
        const auto& rec = ov.edge_points()[e][nd.ep_index];
        const Crossing& x = ov.inputs()[rec.input].strands[rec.strand].xs[rec.k];
        int eps = -1;
        for (int d : scan)
          if (ov.darts()[d].kind == ov::CellKind::EdgeArc) eps = d;
        if (eps < 0) throw std::logic_error("pushoff: no region-side edge dart");
        bool up = ov.darts()[eps].fwd;
        Rat t = table.beside(e, rec.t, up);
        int out = ov.darts()[d_in].fwd ? x.out : 1 - x.out;
        s.xs.push_back({e, out, t});
      } else {
        // vertex U-turn: cross every star edge on the region side, walking
        // clockwise from the entry strand around to the exit strand
        for (int q = (int)scan.size() - 1; q >= 0; --q) {
          int eps = scan[q];
          if (ov.darts()[eps].kind != ov::CellKind::EdgeArc)
            throw std::logic_error("pushoff: strand end inside a vertex scan");
          int e = ov.darts()[eps].owner;
          bool at0 = ov.darts()[eps].fwd;
          Rat t = table.near_end(e, at0);
          auto [tw, cw] = ov.star_corner_after(eps);
          int out = 1 - T.slot_index(tw, cw);
          s.xs.push_back({e, out, t});
        }
      }
    }
    if (!s.xs.empty()) result.strands.push_back(std::move(s));
  }
  return MultiCurve::from_embedded(std::move(result));
}

MultiCurve boundary_of_edge_tree(const Triangulation& T, const std::vector<int>& tree_edges) {
  if (tree_edges.empty())
    throw std::invalid_argument("boundary_of_edge_tree: empty tree");
  Ov ov(T, {});
  std::vector<bool> is_tree(T.num_edges(), false);
  for (int e : tree_edges) is_tree[e] = true;

  std::vector<int> tree_darts;
  for (int d = 0; d < (int)ov.darts().size(); ++d)
    if (ov.darts()[d].kind == ov::CellKind::EdgeArc && is_tree[ov.darts()[d].owner])
      tree_darts.push_back(d);

  PlaceTable table(T.num_edges());
  Strand s;
  s.closed = true;
  std::set<int> visited;
  int start = tree_darts[0];
  int d = start;
  do {
    visited.insert(d);
    int e2 = ov.face_next(d);
    while (!(ov.darts()[e2].kind == ov::CellKind::EdgeArc && is_tree[ov.darts()[e2].owner])) {
      // crossing a non-tree edge near the current vertex
      int e = ov.darts()[e2].owner;
      bool at0 = ov.darts()[e2].fwd;
      Rat t = table.near_end(e, at0);
      auto [tw, cw] = ov.star_corner_after(e2);
      int out = 1 - T.slot_index(tw, cw);
      s.xs.push_back({e, out, t});
      e2 = ov.face_next(ov.darts()[e2].twin);
    }
    d = e2;
  } while (d != start);
  if ((int)visited.size() != (int)tree_darts.size())
    throw std::invalid_argument("boundary_of_edge_tree: edges do not form a tree");

  Embedded emb;
  emb.T = &T;
  emb.strands = {std::move(s)};
  return MultiCurve::from_embedded(std::move(emb));
}

namespace {

std::vector<Letter> word_of(const Triangulation& T, Embedded x,
                            const std::vector<MultiCurve>& sys) {
  std::vector<Embedded> systems;
  for (const MultiCurve& c : sys) systems.push_back(c.embedding());
  systems = ov::realize_disjoint(T, systems);
  Embedded obstacle;
  obstacle.T = &T;
  std::vector<int> owner;
  for (int k = 0; k < (int)systems.size(); ++k)
    for (const Strand& st : systems[k].strands) {
      obstacle.strands.push_back(st);
      owner.push_back(k);
    }
  ov::MinPos r = ov::minimal_pair(T, std::move(x), std::move(obstacle), false);
  std::vector<Embedded> final_inputs(sys.size() + 1);
  final_inputs[0] = r.mover;
  for (auto& e : final_inputs) e.T = &T;
  for (int i = 0; i < (int)r.obstacle.strands.size(); ++i)
    final_inputs[owner[i] + 1].strands.push_back(r.obstacle.strands[i]);
  Ov ov(T, final_inputs);
  std::vector<Letter> word;
  for (int st = 0; st < (int)ov.inputs()[0].strands.size(); ++st)
    for (auto [other, sign] : ov.trace_letters(0, st))
      word.push_back({other - 1, sign});
  return word;
}

}  // namespace

std::vector<Letter> crossing_word(const MultiCurve& x, const std::vector<MultiCurve>& sys) {
  if (x.component_count() == 0) return {};
  return word_of(*x.tri(), x.embedding(), sys);
}

std::vector<Letter> crossing_word(const Arc& x, const std::vector<MultiCurve>& sys) {
  return word_of(*x.tri(), arc_emb(*x.tri(), x), sys);
}

bool freely_trivial_cyclic(const std::vector<Letter>& word) {
  std::vector<Letter> r;
  for (const Letter& l : word) {
    if (!r.empty() && r.back().gen == l.gen && r.back().sign == -l.sign) r.pop_back();
    else r.push_back(l);
  }
  size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo].gen == r[hi - 1].gen && r[lo].sign == -r[hi - 1].sign) {
    ++lo;
    --hi;
  }
  return lo == hi;
}

const std::vector<MultiCurve>& enumerate_curves(const Triangulation& T, int weight_bound) {
  static std::map<std::pair<const Triangulation*, int>, std::vector<MultiCurve>> memo;
  auto key = std::make_pair(&T, weight_bound);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  int ne = T.num_edges();
  // assign edges in an order that closes triangles early
  std::vector<int> order;
  {
    std::vector<bool> done(ne, false);
    std::vector<int> tri_left(T.num_tris(), 3);
    for (int step = 0; step < ne; ++step) {
      int best = -1, best_score = -1;
      for (int e = 0; e < ne; ++e) {
        if (done[e]) continue;
        int score = 0;
        for (int t = 0; t < T.num_tris(); ++t)
          for (int i = 0; i < 3; ++i)
            if (T.tris[t].edge[i] == e) score += (tri_left[t] == 1) ? 100 : tri_left[t] == 2 ? 10 : 1;
        if (score > best_score) { best_score = score; best = e; }
      }
      done[best] = true;
      order.push_back(best);
      for (int t = 0; t < T.num_tris(); ++t)
        for (int i = 0; i < 3; ++i)
          if (T.tris[t].edge[i] == best) { --tri_left[t]; break; }
    }
  }

  std::vector<int> w(ne, -1);
  std::vector<MultiCurve> found;
  std::function<void(int, int)> dfs = [&](int pos, int used) {
    if (pos == ne) {
      if (used == 0) return;
      MultiCurve c;
      try {
        c = MultiCurve::from_weights(T, w);
      } catch (const std::invalid_argument&) {
        return;
      }
      if (c.component_count() == 1 && is_essential(c)) found.push_back(std::move(c));
      return;
    }
    int e = order[pos];
    for (int x = 0; x + used <= weight_bound; ++x) {
      w[e] = x;
      bool ok = true;
      for (int t = 0; t < T.num_tris() && ok; ++t) {
        int a = w[T.tris[t].edge[0]], b = w[T.tris[t].edge[1]], c2 = w[T.tris[t].edge[2]];
        int known = (a >= 0) + (b >= 0) + (c2 >= 0);
        if (known == 3) {
          if ((a + b + c2) % 2 != 0) ok = false;
          else
            for (int i = 0; i < 3 && ok; ++i) {
              int s0 = i == 0 ? a : i == 1 ? b : c2;
              int s1 = i == 0 ? b : i == 1 ? c2 : a;
              int s2 = i == 0 ? c2 : i == 1 ? a : b;
              if (s0 + s2 - s1 < 0) ok = false;
            }
        } else if (known == 2) {
          int p = -1, q = -1;
          for (int v : {a, b, c2})
            if (v >= 0) (p < 0 ? p : q) = v;
          // the missing edge alone needs at least |p - q| of the budget
          if (std::abs(p - q) > weight_bound - (used + x)) ok = false;
        }
      }
      if (ok) dfs(pos + 1, used + x);
    }
    w[e] = -1;
  };
  dfs(0, 0);

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return memo[key] = std::move(found);
}

}  // namespace multisec
