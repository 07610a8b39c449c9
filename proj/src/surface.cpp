#include "multisec/surface.hpp"

#include <algorithm>
#include <map>
#include <memory>

namespace multisec {

namespace {

struct Build {
  Triangulation T;
  int vertex(bool punct) {
    T.puncture.push_back(punct);
    if (punct) ++T.punctures;
    return T.num_vertices() - 1;
  }
  int edge(int v0, int v1) {
    EdgeRec e;
    e.v0 = v0;
    e.v1 = v1;
    T.edges.push_back(e);
    return T.num_edges() - 1;
  }
  Triangle make_tri(std::array<std::pair<int, bool>, 3> sides) {
    Triangle tr;
    for (int i = 0; i < 3; ++i) {
      tr.edge[i] = sides[i].first;
      tr.fwd[i] = sides[i].second;
      const EdgeRec& e = T.edges[sides[i].first];
      tr.v[i] = sides[i].second ? e.v0 : e.v1;
    }
    return tr;
  }
  int tri(std::array<std::pair<int, bool>, 3> sides) {
    T.tris.push_back(make_tri(sides));
    return T.num_tris() - 1;
  }
};

struct GenusModel {
  Build B;
  std::vector<int> A, Bd;   // handle edges a_i, b_i
  int pocket_edge = -1;     // v0 -> u when punctured
  std::vector<int> diag;    // diag[j] = d_j for j >= 2 (fan from corner 0)
  int fan_count = 0;        // triangles T_1..T_F at indices 0..F-1
  std::vector<int> punct_order;
  std::vector<std::vector<int>> segs;
};

// fan-triangulated polygon with word a1 b1 a1' b1' ... (plus e e' when
// punctured); extra punctures chained into the pocket triangle by coning
GenusModel build_genus(int g, int p) {
  GenusModel M;
  Build& B = M.B;
  bool pocket = p >= 1;
  int nsides = 4 * g + (pocket ? 2 : 0);
  int F = nsides - 2;
  M.fan_count = F;

  int v0 = B.vertex(pocket);
  int u = pocket ? B.vertex(true) : -1;
  M.A.resize(g);
  M.Bd.resize(g);
  for (int i = 0; i < g; ++i) {
    M.A[i] = B.edge(v0, v0);
    M.Bd[i] = B.edge(v0, v0);
  }
  if (pocket) M.pocket_edge = B.edge(v0, u);
  M.diag.assign(F + 1, -1);
  for (int j = 2; j <= F; ++j) M.diag[j] = B.edge(v0, v0);

  auto side = [&](int m) -> std::pair<int, bool> {
    if (m < 4 * g) {
      int i = m / 4, r = m % 4;
      if (r == 0) return {M.A[i], true};
      if (r == 1) return {M.Bd[i], true};
      if (r == 2) return {M.A[i], false};
      return {M.Bd[i], false};
    }
    return {M.pocket_edge, m == 4 * g};
  };
  for (int j = 1; j <= F; ++j) {
    auto s0 = j == 1 ? side(0) : std::make_pair(M.diag[j], true);
    auto s2 = j == F ? side(F + 1) : std::make_pair(M.diag[j + 1], false);
    B.tri({s0, side(j), s2});
  }

  M.punct_order.clear();
  if (pocket) {
    M.punct_order = {v0, u};
    M.segs.push_back({M.pocket_edge});
    int cur_tri = F - 1;  // the pocket triangle T_F
    int prev = u;
    for (int extra = 2; extra < p; ++extra) {
      Triangle old = B.T.tris[cur_tri];
      int w = B.vertex(true);
      std::array<int, 3> ge;
      for (int i = 0; i < 3; ++i) ge[i] = B.edge(w, old.v[i]);
      int ci = -1;
      for (int i = 0; i < 3; ++i)
        if (old.v[i] == prev) ci = i;
      if (ci < 0) throw std::logic_error("puncture chain lost its pocket");
      auto child = [&](int i) {
        return B.make_tri({std::make_pair(old.edge[i], old.fwd[i]),
                           std::make_pair(ge[(i + 1) % 3], false),
                           std::make_pair(ge[i], true)});
      };
      B.T.tris[cur_tri] = child(0);
      B.T.tris.push_back(child(1));
      B.T.tris.push_back(child(2));
      M.punct_order.push_back(w);
      M.segs.push_back({ge[ci]});
      prev = w;
      cur_tri = B.T.num_tris() - 1;  // child(2) has w at corner 2
    }
  }
  return M;
}

struct SphereModel {
  Build B;
  std::vector<int> rim;  // rim[i]: vertex i -> i+1
  std::vector<int> punct_order;
  std::vector<std::vector<int>> segs;
};

// two fan-triangulated k-gons glued along the rim
SphereModel build_sphere(int p) {
  SphereModel M;
  Build& B = M.B;
  int k = std::max(p, 3);
  for (int i = 0; i < k; ++i) B.vertex(i < p);
  M.rim.resize(k);
  for (int i = 0; i < k; ++i) M.rim[i] = B.edge(i, (i + 1) % k);
  std::vector<int> dT(k, -1), dB(k, -1);
  for (int j = 2; j <= k - 2; ++j) {
    dT[j] = B.edge(0, j);
    dB[j] = B.edge(0, j);
  }
  for (int j = 1; j <= k - 2; ++j) {
    auto s0 = j == 1 ? std::make_pair(M.rim[0], true) : std::make_pair(dT[j], true);
    auto s2 = j == k - 2 ? std::make_pair(M.rim[k - 1], true)
                         : std::make_pair(dT[j + 1], false);
    B.tri({s0, {M.rim[j], true}, s2});
  }
  for (int j = 1; j <= k - 2; ++j) {
    auto s0 = j == k - 2 ? std::make_pair(M.rim[k - 1], false)
                         : std::make_pair(dB[j + 1], true);
    auto s2 = j == 1 ? std::make_pair(M.rim[0], false) : std::make_pair(dB[j], false);
    B.tri({s0, {M.rim[j], false}, s2});
  }
  for (int i = 0; i < p; ++i) M.punct_order.push_back(i);
  for (int i = 0; i + 1 < p; ++i) M.segs.push_back({M.rim[i]});
  return M;
}

Arc straight_arc(const Triangulation& T, int edge) {
  auto [t, s] = T.edges[edge].slot[0];
  Strand a;
  a.closed = false;
  a.corner_tri = t;
  a.corner_start = s;
  a.corner_end = (s + 1) % 3;
  a.v_start = T.tris[t].v[s];
  a.v_end = T.tris[t].v[(s + 1) % 3];
  return Arc::from_strand(T, a);
}

}  // namespace

Triangulation canonical_triangulation(SurfaceSignature sig) {
  if (sig.genus < 0 || sig.punctures < 0 || sig.punctures % 2 != 0)
    throw std::invalid_argument("canonical_triangulation: bad signature");
  Triangulation T;
  if (sig.genus >= 1) T = build_genus(sig.genus, sig.punctures).B.T;
  else T = build_sphere(sig.punctures).B.T;
  T.genus = sig.genus;
  T.finalize();
  return T;
}

const StandardSurface& standard_surface(SurfaceSignature sig) {
  static std::map<SurfaceSignature, std::unique_ptr<StandardSurface>> registry;
  auto it = registry.find(sig);
  if (it != registry.end()) return *it->second;

  auto S = std::make_unique<StandardSurface>();
  S->sig = sig;
  std::vector<std::vector<int>> segs;
  if (sig.genus >= 1) {
    GenusModel M = build_genus(sig.genus, sig.punctures);
    S->T = std::move(M.B.T);
    S->T.genus = sig.genus;
    S->T.finalize();
    const Triangulation& T = S->T;
    S->puncture_order = M.punct_order;
    segs = M.segs;

    int F = M.fan_count;
    auto tri_of_side = [&](int m) { return std::clamp(m, 1, F); };
    auto side_index = [&](int m) { return m == 0 ? 0 : (m <= F ? 1 : 2); };
    // a route crossing the polygon between the two boundary copies of an edge
    auto route = [&](int edge, int m1, int m2) {
      int t1 = tri_of_side(m1), t2 = tri_of_side(m2);
      std::vector<std::pair<int, int>> hops;
      hops.push_back({edge, T.slot_index(t1 - 1, side_index(m1))});
      for (int j = t1 + 1; j <= t2; ++j)
        hops.push_back({M.diag[j], T.slot_index(j - 1, 0)});
      return curve_from_hops(T, hops);
    };
    for (int i = 0; i < sig.genus; ++i) {
      S->alpha.push_back(route(M.Bd[i], 4 * i + 1, 4 * i + 3));
      S->beta.push_back(route(M.A[i], 4 * i, 4 * i + 2));
      S->delta.push_back(
          boundary_of_neighborhood(T, {S->alpha.back(), S->beta.back()}, {}));
    }
  } else {
    SphereModel M = build_sphere(sig.punctures);
    S->T = std::move(M.B.T);
    S->T.genus = 0;
    S->T.finalize();
    S->puncture_order = M.punct_order;
    segs = M.segs;
  }
  S->chain_segments = segs;

  const Triangulation& T = S->T;
  int b = sig.b();
  for (int j = 0; j < b; ++j) {
    S->rho.push_back(boundary_of_edge_tree(T, segs[2 * j]));
    S->shadows.push_back(straight_arc(T, segs[2 * j][0]));
  }
  for (int j = 0; j + 1 < b; ++j) {
    std::vector<int> tree;
    for (int i = 0; i <= 2 * j; ++i)
      for (int e : segs[i]) tree.push_back(e);
    S->omega.push_back(boundary_of_edge_tree(T, tree));
  }

  auto& slot = registry[sig];
  slot = std::move(S);
  return *slot;
}

}  // namespace multisec
