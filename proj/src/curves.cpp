#include "multisec/curves.hpp"

#include "overlay_internal.hpp"

#include <algorithm>
#include <cassert>

namespace multisec {

namespace ov {

void tighten(const Triangulation& T, Strand& s, bool* dropped_trivial) {
  if (dropped_trivial) *dropped_trivial = false;
  auto entry_slot = [&](const Crossing& x) { return T.edges[x.edge].slot[1 - x.out]; };
  auto exit_slot = [&](const Crossing& x) { return T.edges[x.edge].slot[x.out]; };

  bool changed = true;
  while (changed) {
    changed = false;
    int n = s.size();
    if (s.closed) {
      if (n == 0) {
        if (dropped_trivial) *dropped_trivial = true;
        return;
      }
      for (int k = 0; k < n; ++k) {
        int k2 = (k + 1) % n;
        // U-turn: the segment between re-enters the edge it came from
        if (s.xs[k].edge == s.xs[k2].edge && s.xs[k2].out == 1 - s.xs[k].out) {
          if (k2 > k) {
            s.xs.erase(s.xs.begin() + k2);
            s.xs.erase(s.xs.begin() + k);
          } else {
            s.xs.erase(s.xs.begin() + k);
            s.xs.erase(s.xs.begin() + k2);
          }
          changed = true;
          break;
        }
      }
      continue;
    }
    // arcs: interior U-turns
    for (int k = 0; k + 1 < n && !changed; ++k) {
      if (s.xs[k].edge == s.xs[k + 1].edge && s.xs[k + 1].out == 1 - s.xs[k].out) {
        s.xs.erase(s.xs.begin() + k + 1);
        s.xs.erase(s.xs.begin() + k);
        changed = true;
      }
    }
    if (changed) continue;
    // unhook the start corner: first crossing on a side adjacent to it
    if (n > 0) {
      auto in = entry_slot(s.xs[0]);
      auto out = exit_slot(s.xs[0]);
      int c = s.corner_start;
      int nc = -1;
      if (in.second == c) nc = (out.second + 1) % 3;
      else if (in.second == (c + 2) % 3) nc = out.second;
      if (nc >= 0) {
        s.corner_start = nc;
        s.xs.erase(s.xs.begin());
        if (s.xs.empty()) s.corner_tri = out.first;
        changed = true;
        continue;
      }
    }
    // unhook the end corner
    n = s.size();
    if (n > 0) {
      auto out = exit_slot(s.xs[n - 1]);   // side crossed, seen from the last triangle
      auto in = entry_slot(s.xs[n - 1]);   // the triangle the arc retreats into
      int c = s.corner_end;
      int nc = -1;
      if (out.second == c) nc = (in.second + 1) % 3;
      else if (out.second == (c + 2) % 3) nc = in.second;
      if (nc >= 0) {
        s.corner_end = nc;
        s.xs.pop_back();
        if (s.xs.empty()) s.corner_tri = in.first;
        changed = true;
      }
    }
  }
}

std::vector<int> weights_of(const Triangulation& T, const std::vector<Strand>& strands) {
  std::vector<int> w(T.num_edges(), 0);
  for (const Strand& s : strands)
    for (const Crossing& x : s.xs) ++w[x.edge];
  return w;
}

void canonicalize_positions(const Triangulation& T, std::vector<Strand>& strands) {
  std::vector<std::vector<std::pair<Rat, std::pair<int, int>>>> per(T.num_edges());
  for (int i = 0; i < (int)strands.size(); ++i)
    for (int k = 0; k < strands[i].size(); ++k)
      per[strands[i].xs[k].edge].push_back({strands[i].xs[k].t, {i, k}});
  for (int e = 0; e < T.num_edges(); ++e) {
    auto& v = per[e];
    std::stable_sort(v.begin(), v.end(),
                     [](auto& a, auto& b) { return a.first < b.first; });
    for (int r = 0; r < (int)v.size(); ++r)
      strands[v[r].second.first].xs[v[r].second.second].t = Rat(r + 1, (int)v.size() + 1);
  }
}

MinPos minimal_pair(const Triangulation& T, Embedded mover, Embedded obstacle,
                           bool to_zero) {
  for (;;) {
    Ov ov(T, {mover, obstacle});
    auto bg = ov.find_bigon(0, 1, true);
    if (!bg) {
      MinPos r;
      r.mover = ov.inputs()[0];
      r.obstacle = ov.inputs()[1];
      r.crossings = ov.crossings_between(0, 1);
      if (to_zero && r.crossings != 0)
        throw std::logic_error("minimal_pair: systems are not disjoint");
      return r;
    }
    mover = ov.reroute(*bg);
    // keep the obstacle on the same position scale as the rerouted mover;
    // re-pairing the new mover with stale positions can oscillate
    obstacle = ov.inputs()[1];
    // clean up any slack the reroute introduced
    std::vector<Strand> kept;
    for (Strand& s : mover.strands) {
      bool drop = false;
      tighten(T, s, &drop);
      if (!drop) kept.push_back(std::move(s));
    }
    mover.strands = std::move(kept);
    if (mover.strands.empty()) {
      MinPos r;
      r.mover = mover;
      r.obstacle = obstacle;
      r.crossings = 0;
      return r;
    }
  }
}

std::vector<Embedded> realize_disjoint(const Triangulation& T,
                                              std::vector<Embedded> systems) {
  if (systems.empty()) return systems;
  Embedded obstacle = systems[0];
  std::vector<int> owner(obstacle.strands.size(), 0);
  for (int k = 1; k < (int)systems.size(); ++k) {
    MinPos r = minimal_pair(T, systems[k], obstacle, true);
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

MultiCurve curve_from_strands(const Triangulation& T, std::vector<Strand> strands,
                              int* dropped) {
  Embedded e;
  e.T = &T;
  e.strands = std::move(strands);
  return MultiCurve::from_embedded(std::move(e), dropped);
}

}  // namespace ov

using ov::Ov;

int MultiCurve::total_weight() const {
  int s = 0;
  for (int x : w_) s += x;
  return s;
}

MultiCurve MultiCurve::from_weights(const Triangulation& T, std::vector<int> w) {
  if ((int)w.size() != T.num_edges())
    throw std::invalid_argument("from_weights: wrong coordinate length");
  for (int x : w)
    if (x < 0) throw std::invalid_argument("from_weights: negative weight");

  // per-triangle corner counts; corner c joins sides c and (c+2)%3
  std::vector<std::array<int, 3>> corner(T.num_tris());
  for (int t = 0; t < T.num_tris(); ++t) {
    int a = w[T.tris[t].edge[0]], b = w[T.tris[t].edge[1]], c = w[T.tris[t].edge[2]];
    if ((a + b + c) % 2 != 0)
      throw std::invalid_argument("from_weights: odd triangle sum");
    std::array<int, 3> s{a, b, c};
    for (int i = 0; i < 3; ++i) {
      int k = (s[i] + s[(i + 2) % 3] - s[(i + 1) % 3]) / 2;
      if (k < 0) throw std::invalid_argument("from_weights: triangle inequality violated");
      corner[t][i] = k;
    }
  }

  // pairing: within triangle t, corner c, the j-th point of side c from the
  // corner matches the j-th point of side (c+2) from the corner
  auto edge_rank = [&](int t, int side, int local) {
    int e = T.tris[t].edge[side];
    return T.side_forward(t, side) ? local : w[e] - 1 - local;
  };
  // partner of (edge, rank) within triangle slot (t, side)
  auto partner = [&](int t, int side, int local) -> std::pair<int, int> {
    // which corner does this local position belong to?  side s serves corner s
    // (first corner[t][s] points) and corner (s+1)%3 (the rest)
    int ws = w[T.tris[t].edge[side]];
    if (local < corner[t][side]) {
      int c = side;
      int oside = (c + 2) % 3;
      int olocal = w[T.tris[t].edge[oside]] - 1 - local;
      return {oside, olocal};
    }
    int c = (side + 1) % 3;
    int from_end = ws - 1 - local;  // position counted from corner c
    if (from_end >= corner[t][c])
      throw std::logic_error("from_weights: matching inconsistency");
    int oside = c;  // corner c joins side c and side (c+2); we are on side (c+2)
    return {oside, from_end};
  };

  // trace loops over points (edge, rank); state: point + slot we entered from
  std::vector<std::vector<std::array<bool, 2>>> used(T.num_edges());
  for (int e = 0; e < T.num_edges(); ++e) used[e].assign(w[e], {false, false});

  std::vector<std::vector<Crossing>> loops;
  for (int e0 = 0; e0 < T.num_edges(); ++e0)
    for (int r0 = 0; r0 < w[e0]; ++r0)
      for (int in0 = 0; in0 < 2; ++in0) {
        if (used[e0][r0][in0]) continue;
        std::vector<Crossing> loop;
        int e = e0, r = r0, in = in0;
        do {
          used[e][r][in] = true;
          // exit into the other slot
          int out = 1 - in;
          loop.push_back({e, out, Rat(r + 1, w[e] + 1)});
          auto [t, side] = T.edges[e].slot[out];
          int local = T.side_forward(t, side) ? r : w[e] - 1 - r;
          auto [oside, olocal] = partner(t, side, local);
          int e2 = T.tris[t].edge[oside];
          int r2 = edge_rank(t, oside, olocal);
          int in2 = T.slot_index(t, oside);
          e = e2;
          r = r2;
          in = in2;
        } while (!(e == e0 && r == r0 && in == in0));
        loops.push_back(std::move(loop));
      }

  // each point is traversed once, so every loop is found twice (once per
  // orientation); canonicalize and dedup
  auto xless = [](const Crossing& x, const Crossing& y) {
    if (x.edge != y.edge) return x.edge < y.edge;
    if (x.t != y.t) return x.t < y.t;
    return x.out < y.out;
  };
  auto seq_less = [&](const std::vector<Crossing>& a, const std::vector<Crossing>& b) {
    for (int i = 0; i < (int)a.size(); ++i) {
      if (xless(a[i], b[i])) return true;
      if (xless(b[i], a[i])) return false;
    }
    return false;
  };
  auto canon = [&](std::vector<Crossing> xs) {
    auto best_rotation = [&](std::vector<Crossing> v) {
      int n = (int)v.size();
      int best = 0;
      for (int i = 1; i < n; ++i)
        if (xless(v[i], v[best])) best = i;
      std::rotate(v.begin(), v.begin() + best, v.end());
      return v;
    };
    std::vector<Crossing> rv(xs.rbegin(), xs.rend());
    for (Crossing& x : rv) x.out = 1 - x.out;
    auto a = best_rotation(std::move(xs));
    auto b = best_rotation(std::move(rv));
    return seq_less(b, a) ? b : a;
  };

  std::vector<std::vector<Crossing>> canonical;
  for (auto& l : loops) canonical.push_back(canon(std::move(l)));
  std::sort(canonical.begin(), canonical.end(),
            [](const std::vector<Crossing>& a, const std::vector<Crossing>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              for (int i = 0; i < (int)a.size(); ++i) {
                auto ta = std::tuple(a[i].edge, a[i].t.n, a[i].t.d, a[i].out);
                auto tb = std::tuple(b[i].edge, b[i].t.n, b[i].t.d, b[i].out);
                if (ta != tb) return ta < tb;
              }
              return false;
            });
  canonical.erase(std::unique(canonical.begin(), canonical.end(),
                              [](const std::vector<Crossing>& a,
                                 const std::vector<Crossing>& b) {
                                if (a.size() != b.size()) return false;
                                for (int i = 0; i < (int)a.size(); ++i)
                                  if (a[i].edge != b[i].edge || !(a[i].t == b[i].t) ||
                                      a[i].out != b[i].out)
                                    return false;
                                return true;
                              }),
                  canonical.end());

  MultiCurve c;
  c.T_ = &T;
  c.w_ = std::move(w);
  c.components_ = (int)canonical.size();
  c.emb_.T = &T;
  for (auto& l : canonical) {
    Strand s;
    s.closed = true;
    s.xs = std::move(l);
    c.emb_.strands.push_back(std::move(s));
  }
  auto check = ov::weights_of(T, c.emb_.strands);
  if (check != c.w_) throw std::logic_error("from_weights: retrace weight mismatch");
  return c;
}

MultiCurve MultiCurve::from_embedded(Embedded e, int* dropped) {
  if (dropped) *dropped = 0;
  if (e.strands.empty()) {
    MultiCurve c;
    c.T_ = e.T;
    if (e.T) c.w_.assign(e.T->num_edges(), 0);
    c.emb_ = std::move(e);
    return c;
  }
  const Triangulation& T = *e.T;
  for (const Strand& s : e.strands)
    if (!s.closed) throw std::invalid_argument("from_embedded: arc in curve system");
  // embeddedness check: the overlay throws on any same-input crossing
  { Ov check(T, {e}); }
  std::vector<Strand> kept;
  for (Strand& s : e.strands) {
    bool drop = false;
    ov::tighten(T, s, &drop);
    if (drop) {
      if (dropped) ++*dropped;
    } else {
      kept.push_back(std::move(s));
    }
  }
  return from_weights(T, ov::weights_of(T, kept));
}

Arc Arc::from_strand(const Triangulation& T, Strand s) {
  if (s.closed) throw std::invalid_argument("Arc::from_strand: closed strand");
  bool drop = false;
  ov::tighten(T, s, &drop);
  {
    Embedded e;
    e.T = &T;
    e.strands = {s};
    Ov check(T, {e});
  }
  std::vector<Strand> one{s};
  ov::canonicalize_positions(T, one);
  s = one[0];

  Arc a;
  a.T_ = &T;
  a.s_ = s;
  int vlo = std::min(s.v_start, s.v_end), vhi = std::max(s.v_start, s.v_end);
  a.key_ = {vlo, vhi};
  if (s.xs.empty()) {
    // a crossing-free arc is parallel to a triangulation edge
    int ca = s.corner_start, cb = s.corner_end;
    int side;
    if (cb == (ca + 1) % 3) side = ca;
    else if (ca == (cb + 1) % 3) side = cb;
    else throw std::invalid_argument("Arc::from_strand: degenerate corner arc");
    a.key_.push_back(-1);
    a.key_.push_back(T.tris[s.corner_tri].edge[side]);
    return a;
  }
  // own-rank of each crossing on its edge
  std::map<int, std::vector<std::pair<Rat, int>>> per;
  for (int k = 0; k < s.size(); ++k) per[s.xs[k].edge].push_back({s.xs[k].t, k});
  std::vector<int> rank(s.size());
  for (auto& [e, v] : per) {
    std::sort(v.begin(), v.end(),
              [](auto& x, auto& y) { return x.first < y.first; });
    for (int r = 0; r < (int)v.size(); ++r) rank[v[r].second] = r;
  }
  auto seq_fwd = [&]() {
    std::vector<int> q;
    for (int k = 0; k < s.size(); ++k) {
      auto sl = T.edges[s.xs[k].edge].slot[s.xs[k].out];
      q.push_back(3 * sl.first + sl.second);
      q.push_back(rank[k]);
    }
    return q;
  };
  auto seq_rev = [&]() {
    std::vector<int> q;
    for (int k = s.size() - 1; k >= 0; --k) {
      auto sl = T.edges[s.xs[k].edge].slot[1 - s.xs[k].out];
      q.push_back(3 * sl.first + sl.second);
      q.push_back(rank[k]);
    }
    return q;
  };
  std::vector<int> q;
  if (s.v_start < s.v_end) q = seq_fwd();
  else if (s.v_start > s.v_end) q = seq_rev();
  else q = std::min(seq_fwd(), seq_rev());
  a.key_.insert(a.key_.end(), q.begin(), q.end());
  return a;
}

// --- intersection numbers ---

namespace {

Embedded emb_of(const MultiCurve& c) { return c.embedding(); }
Embedded emb_of(const Triangulation& T, const Arc& a) {
  Embedded e;
  e.T = &T;
  e.strands = {a.strand()};
  return e;
}

}  // namespace

int geometric_intersection(const MultiCurve& a, const MultiCurve& b) {
  if (a.empty() || b.empty()) return 0;
  if (a.tri() != b.tri()) throw std::invalid_argument("intersection: different surfaces");
  return ov::minimal_pair(*a.tri(), emb_of(a), emb_of(b), false).crossings;
}

int geometric_intersection(const MultiCurve& a, const Arc& b) {
  if (a.empty()) return 0;
  if (a.tri() != b.tri()) throw std::invalid_argument("intersection: different surfaces");
  return ov::minimal_pair(*a.tri(), emb_of(a), emb_of(*b.tri(), b), false).crossings;
}

int geometric_intersection(const Arc& a, const Arc& b) {
  if (a.tri() != b.tri()) throw std::invalid_argument("intersection: different surfaces");
  const Triangulation& T = *a.tri();
  return ov::minimal_pair(T, emb_of(T, a), emb_of(T, b), false).crossings;
}

int algebraic_intersection(const MultiCurve& a, const MultiCurve& b) {
  if (a.empty() || b.empty()) return 0;
  if (a.tri() != b.tri()) throw std::invalid_argument("intersection: different surfaces");
  auto r = ov::minimal_pair(*a.tri(), emb_of(a), emb_of(b), false);
  Ov ov(*a.tri(), {r.mover, r.obstacle});
  return ov.algebraic_between(0, 1);
}

int geometric_intersection_cached(const MultiCurve& a, const MultiCurve& b) {
  static std::map<std::tuple<const Triangulation*, std::vector<int>, std::vector<int>>, int>
      cache;
  if (a.empty() || b.empty()) return 0;
  auto key = a.weights() <= b.weights()
                 ? std::make_tuple(a.tri(), a.weights(), b.weights())
                 : std::make_tuple(a.tri(), b.weights(), a.weights());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  int v = geometric_intersection(a, b);
  cache[key] = v;
  return v;
}

// --- cutting ---

CutResult cut_along(const MultiCurve& c) {
  if (c.empty()) throw std::invalid_argument("cut_along: empty curve");
  Ov ov(*c.tri(), {c.embedding()});
  auto rg = ov.regions({0});
  CutResult r;
  r.components = rg.comps;
  return r;
}

CutResult cut_along_all(const Triangulation& T, const std::vector<MultiCurve>& cs,
                        const std::vector<Arc>& arcs) {
  // disjoint curve systems merge by adding normal coordinates
  std::vector<int> w(T.num_edges(), 0);
  for (const MultiCurve& c : cs) {
    if (c.empty()) continue;
    if (c.tri() != &T) throw std::invalid_argument("cut_along_all: foreign curve");
    for (int e = 0; e < T.num_edges(); ++e) w[e] += c.weights()[e];
  }
  MultiCurve merged = MultiCurve::from_weights(T, w);
  std::vector<Embedded> systems;
  if (merged.component_count() > 0) systems.push_back(merged.embedding());
  for (const Arc& a : arcs) systems.push_back(emb_of(T, a));
  systems = ov::realize_disjoint(T, systems);
  Ov ov(T, systems);
  std::vector<int> cut(systems.size());
  std::iota(cut.begin(), cut.end(), 0);
  auto rg = ov.regions(cut);
  CutResult r;
  r.components = rg.comps;
  return r;
}

// --- basic curve predicates ---

bool is_essential(const MultiCurve& c) {
  if (c.component_count() != 1) throw std::invalid_argument("is_essential: need one component");
  for (const CutComponent& k : cut_along(c).components)
    if (k.genus == 0 && k.boundaries == 1 && k.punctures <= 1) return false;
  return true;
}

bool bounds_once_punctured_disk(const MultiCurve& c) {
  if (c.component_count() != 1) return false;
  for (const CutComponent& k : cut_along(c).components)
    if (k.genus == 0 && k.boundaries == 1 && k.punctures == 1) return true;
  return false;
}

bool is_separating(const MultiCurve& c) {
  if (c.component_count() != 1) throw std::invalid_argument("is_separating: need one component");
  return cut_along(c).components.size() == 2;
}

std::optional<std::vector<int>> encloses_punctures(const MultiCurve& c) {
  auto comps = cut_along(c).components;
  const CutComponent* best = nullptr;
  for (const CutComponent& k : comps) {
    if (k.genus != 0 || k.boundaries != 1) continue;
    if (!best || k.puncture_vertices.size() < best->puncture_vertices.size() ||
        (k.puncture_vertices.size() == best->puncture_vertices.size() &&
         k.puncture_vertices < best->puncture_vertices))
      best = &k;
  }
  if (!best) return std::nullopt;
  return best->puncture_vertices;
}

bool is_isotopic(const MultiCurve& a, const MultiCurve& b) {
  if (a.tri() != b.tri()) return false;
  if (a.component_count() != 1 || b.component_count() != 1)
    throw std::invalid_argument("is_isotopic: need connected curves");
  if (a.weights() == b.weights()) return true;
  const Triangulation& T = *a.tri();
  // without aux vertices normal coordinates separate isotopy classes; with
  // them, curves differing only by a sweep across an aux vertex need the
  // annulus test below
  if (T.num_vertices() == T.punctures) return false;
  if (geometric_intersection_cached(a, b) != 0) return false;
  auto systems = ov::realize_disjoint(T, {a.embedding(), b.embedding()});
  Ov ov(T, systems);
  auto rg = ov.regions({0, 1});
  for (int w = 0; w < (int)rg.walks.size(); ++w) {
    int r = rg.walk_region[w];
    const CutComponent& k = rg.comps[r];
    if (k.genus != 0 || k.boundaries != 2 || k.punctures != 0) continue;
    // annulus: must be cobounded by one walk of each input
    std::set<int> inputs;
    for (int w2 = 0; w2 < (int)rg.walks.size(); ++w2)
      if (rg.walk_region[w2] == r)
        inputs.insert(ov.chords()[ov.darts()[rg.walks[w2][0]].owner].input);
    if (inputs.size() == 2) return true;
  }
  return false;
}

}  // namespace multisec
