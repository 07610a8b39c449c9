#include "multisec/tangles.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace multisec {

namespace {

int arc_crossings(const MultiCurve& x, const Arc& a) {
  return geometric_intersection(x, a);
}

// default slider enumeration bound: the scale of the data at hand
int auto_slider_bound(const TangleData& t, const std::vector<MultiCurve>* extra) {
  int b = 4;
  for (const MultiCurve& c : t.cut_system.curves) b = std::max(b, c.total_weight());
  for (const Arc& a : t.shadows.arcs) b = std::max(b, (int)a.strand().xs.size());
  if (extra)
    for (const MultiCurve& c : *extra) b = std::max(b, c.total_weight());
  return b;
}

}  // namespace

std::vector<std::vector<int>> ShadowSystem::key() const {
  std::vector<std::vector<int>> k;
  for (const Arc& a : arcs) k.push_back(a.key());
  std::sort(k.begin(), k.end());
  return k;
}

CutSystem make_cut_system(const Triangulation& T, std::vector<MultiCurve> curves) {
  if ((int)curves.size() != T.genus)
    throw std::invalid_argument("make_cut_system: need genus many curves");
  for (const MultiCurve& c : curves) {
    if (c.tri() != &T) throw std::invalid_argument("make_cut_system: wrong surface");
    if (c.component_count() != 1 || !is_essential(c) || is_separating(c))
      throw std::invalid_argument("make_cut_system: curves must be essential and non-separating");
  }
  int g = (int)curves.size();
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j) {
      if (geometric_intersection_cached(curves[i], curves[j]) != 0)
        throw std::invalid_argument("make_cut_system: curves intersect");
      if (is_isotopic(curves[i], curves[j]))
        throw std::invalid_argument("make_cut_system: isotopic pair");
    }
  if (g > 0) {
    CutResult r = cut_along_all(T, curves);
    if (r.components.size() != 1 || r.components[0].genus != 0)
      throw std::invalid_argument("make_cut_system: joint cut is not planar");
  }
  CutSystem C;
  C.T = &T;
  C.curves = std::move(curves);
  return C;
}

ShadowSystem make_shadow_system(const Triangulation& T, std::vector<Arc> arcs) {
  if ((int)arcs.size() * 2 != T.punctures)
    throw std::invalid_argument("make_shadow_system: need b arcs");
  std::set<int> met;
  for (const Arc& a : arcs) {
    if (a.tri() != &T) throw std::invalid_argument("make_shadow_system: wrong surface");
    int u = a.v_start(), v = a.v_end();
    if (u == v || !T.puncture[u] || !T.puncture[v])
      throw std::invalid_argument("make_shadow_system: arc must join two punctures");
    if (!met.insert(u).second || !met.insert(v).second)
      throw std::invalid_argument("make_shadow_system: puncture met twice");
  }
  int b = (int)arcs.size();
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j)
      if (geometric_intersection(arcs[i], arcs[j]) != 0)
        throw std::invalid_argument("make_shadow_system: arcs intersect");
  ShadowSystem S;
  S.T = &T;
  S.arcs = std::move(arcs);
  return S;
}

TangleData make_tangle(CutSystem cut, ShadowSystem shadows) {
  if (cut.T != shadows.T) throw std::invalid_argument("make_tangle: different surfaces");
  for (const MultiCurve& c : cut.curves)
    for (const Arc& a : shadows.arcs)
      if (geometric_intersection(c, a) != 0)
        throw std::invalid_argument("make_tangle: shadow meets a cut curve");
  return {std::move(cut), std::move(shadows)};
}

bool bounds_disk_in_handlebody(const MultiCurve& x, const CutSystem& C) {
  if (x.component_count() != 1 || !is_essential(x))
    throw std::invalid_argument("bounds_disk_in_handlebody: need a connected essential curve");
  if (C.curves.empty()) return true;  // genus zero: every curve bounds below
  return freely_trivial_cyclic(crossing_word(x, C.curves));
}

CDiskKind c_disk_kind(const MultiCurve& x, const TangleData& t) {
  if (x.tri() != t.cut_system.T)
    throw std::invalid_argument("c_disk_kind: mismatched surface");
  int once = 0, more = 0;
  for (const Arc& a : t.shadows.arcs) {
    int k = arc_crossings(x, a);
    if (k == 1) ++once;
    else if (k > 1) ++more;
  }
  if (more > 0 || once > 1) return CDiskKind::None;
  if (!bounds_disk_in_handlebody(x, t.cut_system)) return CDiskKind::None;
  return once == 0 ? CDiskKind::Compressing : CDiskKind::Cut;
}

bool is_compressing(const MultiCurve& x, const TangleData& t) {
  return c_disk_kind(x, t) == CDiskKind::Compressing;
}

bool is_cut(const MultiCurve& x, const TangleData& t) {
  return c_disk_kind(x, t) == CDiskKind::Cut;
}

std::vector<ShadowSystem> shadow_slides(const TangleData& t, int slider_weight_bound) {
  const Triangulation& T = *t.cut_system.T;
  int bound = slider_weight_bound > 0 ? slider_weight_bound : auto_slider_bound(t, nullptr);
  std::vector<ShadowSystem> out;
  std::set<std::vector<std::vector<int>>> seen{t.shadows.key()};
  for (const MultiCurve& c : enumerate_curves(T, bound)) {
    if (!freely_trivial_cyclic(crossing_word(c, t.cut_system.curves))) continue;
    // a disjoint slider moves nothing; skip early
    bool touches = false;
    for (const Arc& a : t.shadows.arcs)
      if (arc_crossings(c, a) != 0) touches = true;
    if (!touches) continue;
    for (int n : {1, -1}) {
      ShadowSystem s;
      s.T = &T;
      for (const Arc& a : t.shadows.arcs) s.arcs.push_back(dehn_twist(a, c, n));
      if (seen.insert(s.key()).second) out.push_back(std::move(s));
    }
  }
  return out;
}

bool in_disk_set(const PantsDecomposition& P, const TangleData& t, int slide_budget,
                 int slider_weight_bound) {
  auto certified = [&](const TangleData& td) {
    for (const MultiCurve& c : P.curves)
      if (c_disk_kind(c, td) == CDiskKind::None) return false;
    return true;
  };
  if (certified(t)) return true;
  if (slide_budget <= 0) return false;
  int bound = slider_weight_bound > 0 ? slider_weight_bound : auto_slider_bound(t, &P.curves);
  std::set<std::vector<std::vector<int>>> seen{t.shadows.key()};
  std::deque<std::pair<ShadowSystem, int>> work;
  work.push_back({t.shadows, 0});
  while (!work.empty()) {
    auto [sys, depth] = std::move(work.front());
    work.pop_front();
    TangleData cur{t.cut_system, sys};
    if (depth > 0 && certified(cur)) return true;
    if (depth == slide_budget) continue;
    for (ShadowSystem& next : shadow_slides(cur, bound))
      if (seen.insert(next.key()).second) work.push_back({std::move(next), depth + 1});
  }
  return false;
}

std::vector<PantsDecomposition> enumerate_disk_set(const TangleData& t, int weight_bound) {
  const Triangulation& T = *t.cut_system.T;
  for (const MultiCurve& c : t.cut_system.curves)
    if (c.total_weight() > weight_bound) return {};
  SurfaceSignature sig{T.genus, T.punctures};
  int n = sig.pants_count();

  std::vector<MultiCurve> cand;
  for (const MultiCurve& c : enumerate_curves(T, weight_bound))
    if (c_disk_kind(c, t) != CDiskKind::None) cand.push_back(c);

  int m = (int)cand.size();
  std::vector<std::vector<bool>> compat(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (geometric_intersection_cached(cand[i], cand[j]) == 0 &&
          !is_isotopic(cand[i], cand[j]))
        compat[i][j] = compat[j][i] = true;

  std::vector<PantsDecomposition> out;
  std::set<std::vector<std::vector<int>>> seen;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    if ((int)pick.size() == n) {
      PantsDecomposition P;
      P.T = &T;
      for (int i : pick) P.curves.push_back(cand[i]);
      if (!validate(P).ok) return;
      if (seen.insert(P.key()).second) out.push_back(std::move(P));
      return;
    }
    for (int i = from; i < m; ++i) {
      bool ok = true;
      for (int j : pick)
        if (!compat[j][i]) ok = false;
      if (!ok) continue;
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);

  // fold together vertices that differ only by sweeps across aux vertices
  std::vector<PantsDecomposition> dedup;
  for (PantsDecomposition& P : out) {
    bool dup = false;
    for (const PantsDecomposition& Q : dedup) {
      bool all = true;
      for (const MultiCurve& c : P.curves) {
        bool matched = false;
        for (const MultiCurve& d : Q.curves)
          if (is_isotopic(c, d)) matched = true;
        if (!matched) all = false;
      }
      if (all) dup = true;
    }
    if (!dup) dedup.push_back(std::move(P));
  }
  std::sort(dedup.begin(), dedup.end(),
            [](const PantsDecomposition& a, const PantsDecomposition& b) {
              return a.key() < b.key();
            });
  return dedup;
}

std::vector<PantsDecomposition> enumerate_disk_set(const TangleData& t, int weight_bound,
                                                   int slide_budget, int slider_weight_bound) {
  int bound = slider_weight_bound > 0 ? slider_weight_bound : weight_bound;
  std::vector<PantsDecomposition> out;
  std::set<std::vector<std::vector<int>>> seen_vertices;
  std::set<std::vector<std::vector<int>>> seen_shadows{t.shadows.key()};
  std::deque<std::pair<ShadowSystem, int>> work;
  work.push_back({t.shadows, 0});
  while (!work.empty()) {
    auto [sys, depth] = std::move(work.front());
    work.pop_front();
    TangleData cur{t.cut_system, sys};
    for (PantsDecomposition& P : enumerate_disk_set(cur, weight_bound))
      if (seen_vertices.insert(P.key()).second) out.push_back(std::move(P));
    if (depth == slide_budget) continue;
    for (ShadowSystem& next : shadow_slides(cur, bound))
      if (seen_shadows.insert(next.key()).second) work.push_back({std::move(next), depth + 1});
  }
  // fold again across representatives
  std::vector<PantsDecomposition> dedup;
  for (PantsDecomposition& P : out) {
    bool dup = false;
    for (const PantsDecomposition& Q : dedup) {
      bool all = true;
      for (const MultiCurve& c : P.curves) {
        bool matched = false;
        for (const MultiCurve& d : Q.curves)
          if (is_isotopic(c, d)) matched = true;
        if (!matched) all = false;
      }
      if (all) dup = true;
    }
    if (!dup) dedup.push_back(std::move(P));
  }
  std::sort(dedup.begin(), dedup.end(),
            [](const PantsDecomposition& a, const PantsDecomposition& b) {
              return a.key() < b.key();
            });
  return dedup;
}

}  // namespace multisec
