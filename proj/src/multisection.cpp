#include "multisec/multisection.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace multisec {

namespace {

// dense integer matrices here are at most g x g with g <= 4, so rank and
// torsion data come straight from minor determinants
long long minor_det(const std::vector<std::vector<long long>>& m, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
  int sz = (int)rows.size();
  if (sz == 0) return 1;
  long long det = 0;
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (int j = 0; j < sz; ++j) {
    std::vector<int> sub_cols;
    for (int t = 0; t < sz; ++t)
      if (t != j) sub_cols.push_back(cols[t]);
    long long term = m[rows[0]][cols[j]] * minor_det(m, sub_rows, sub_cols);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

void subsets(int n, int r, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    if ((int)pick.size() == r) {
      fn(pick);
      return;
    }
    for (int i = from; i <= n - (r - (int)pick.size()); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

// gcd of all r x r minors (0 when every minor vanishes; 1 for r = 0)
long long minor_gcd(const std::vector<std::vector<long long>>& m, int r) {
  int g = (int)m.size();
  if (r == 0) return 1;
  long long acc = 0;
  subsets(g, r, [&](const std::vector<int>& rows) {
    subsets(g, r, [&](const std::vector<int>& cols) {
      acc = std::gcd(acc, minor_det(m, rows, cols));
    });
  });
  return acc < 0 ? -acc : acc;
}

int matrix_rank(const std::vector<std::vector<long long>>& m) {
  int g = (int)m.size();
  for (int r = g; r >= 1; --r)
    if (minor_gcd(m, r) != 0) return r;
  return 0;
}

std::vector<std::vector<long long>> intersection_matrix(const CutSystem& A, const CutSystem& B) {
  int g = (int)A.curves.size();
  std::vector<std::vector<long long>> m(g, std::vector<long long>(g, 0));
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j)
      m[i][j] = algebraic_intersection(A.curves[i], B.curves[j]);
  return m;
}

// orbit count of the two puncture-pairing involutions: components of the
// graph on the bridge points with one edge per shadow arc of either system
int orbit_count(const ShadowSystem& A, const ShadowSystem& B) {
  std::map<int, int> uf;
  std::function<int(int)> find = [&](int v) -> int {
    auto it = uf.find(v);
    if (it == uf.end()) {
      uf[v] = v;
      return v;
    }
    if (it->second == v) return v;
    return it->second = find(it->second);
  };
  auto unite = [&](int a, int b) { uf[find(a)] = find(b); };
  for (const Arc& a : A.arcs) unite(a.v_start(), a.v_end());
  for (const Arc& a : B.arcs) unite(a.v_start(), a.v_end());
  std::set<int> roots;
  for (auto& [v, _] : uf) roots.insert(find(v));
  return (int)roots.size();
}

std::vector<MultiCurve> components_of(const MultiCurve& m) {
  std::vector<MultiCurve> out;
  for (const Strand& s : m.embedding().strands) {
    Embedded e;
    e.T = m.tri();
    e.strands = {s};
    MultiCurve c = MultiCurve::from_embedded(std::move(e));
    if (c.component_count() == 1) out.push_back(std::move(c));
  }
  return out;
}

ReducingKind classify_kind(const MultiCurve& curve, const std::vector<CDiskKind>& kinds) {
  bool sep = is_separating(curve);
  bool compress = kinds[0] == CDiskKind::Compressing;
  if (sep) return compress ? ReducingKind::CompressSeparating : ReducingKind::CutSeparating;
  return compress ? ReducingKind::CompressNonsep : ReducingKind::CutNonsep;
}

// greedy destabilization + bridge matching for one consecutive splitting
PairReport full_pair_check(const TangleData& A, const TangleData& B, int ki) {
  std::vector<MultiCurve> as = A.cut_system.curves, bs = B.cut_system.curves;
  auto disjoint_from_rest = [&](const MultiCurve& x, int skip_a, int skip_b) {
    for (int i = 0; i < (int)as.size(); ++i)
      if (i != skip_a && geometric_intersection_cached(x, as[i]) != 0) return false;
    for (int i = 0; i < (int)bs.size(); ++i)
      if (i != skip_b && geometric_intersection_cached(x, bs[i]) != 0) return false;
    for (const Arc& s : A.shadows.arcs)
      if (geometric_intersection(x, s) != 0) return false;
    for (const Arc& s : B.shadows.arcs)
      if (geometric_intersection(x, s) != 0) return false;
    return true;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < (int)as.size() && !changed; ++i)
      for (int j = 0; j < (int)bs.size() && !changed; ++j) {
        if (geometric_intersection_cached(as[i], bs[j]) != 1) continue;
        if (!disjoint_from_rest(as[i], i, j) || !disjoint_from_rest(bs[j], i, j)) continue;
        as.erase(as.begin() + i);
        bs.erase(bs.begin() + j);
        changed = true;
      }
  }
  if ((int)as.size() != ki)
    return {PairStatus::NecessaryConditionsOnly, "greedy destabilization incomplete"};
  // the leftover curves must be a matched stabilized-away-from system
  std::vector<bool> used(bs.size(), false);
  for (const MultiCurve& a : as) {
    bool matched = false;
    for (int j = 0; j < (int)bs.size() && !matched; ++j)
      if (!used[j] && is_isotopic(a, bs[j])) {
        used[j] = true;
        matched = true;
      }
    if (!matched)
      return {PairStatus::NecessaryConditionsOnly, "leftover cut curves not matched"};
  }
  // standard bridge position: shadows agree arc by arc
  std::multiset<std::vector<int>> ka, kb;
  for (const Arc& s : A.shadows.arcs) ka.insert(s.key());
  for (const Arc& s : B.shadows.arcs) kb.insert(s.key());
  if (ka != kb)
    return {PairStatus::NecessaryConditionsOnly, "bridge position not matched arc by arc"};
  return {PairStatus::Verified, ""};
}

}  // namespace

int chi_x(int n, int g, const std::vector<int>& k) {
  int sum = 0;
  for (int v : k) sum += v;
  return 2 + (n - 2) * g - sum;
}

int chi_f(int n, int b, const std::vector<int>& c) {
  int sum = 0;
  for (int v : c) sum += v;
  return sum - (n - 2) * b;
}

MultisectionDiagram make_multisection(const Triangulation& T, std::vector<TangleData> sectors,
                                      std::vector<Provenance> provenance) {
  if ((int)sectors.size() < 3)
    throw std::invalid_argument("make_multisection: need at least three sectors");
  for (const TangleData& t : sectors)
    if (t.cut_system.T != &T)
      throw std::invalid_argument("make_multisection: sector on a different surface");
  MultisectionDiagram d;
  d.T = &T;
  d.sig = {T.genus, T.punctures};
  d.n = (int)sectors.size();
  d.sectors = std::move(sectors);
  d.provenance = std::move(provenance);
  for (int i = 0; i < d.n; ++i) {
    const TangleData& prev = d.sectors[(i + d.n - 1) % d.n];
    const TangleData& cur = d.sectors[i];
    d.k.push_back(d.sig.genus - matrix_rank(intersection_matrix(prev.cut_system, cur.cut_system)));
    d.c.push_back(orbit_count(prev.shadows, cur.shadows));
  }
  return d;
}

EulerData euler_characteristics(const MultisectionDiagram& d) {
  EulerData e;
  e.chi_x = chi_x(d.n, d.sig.genus, d.k);
  if (d.sig.punctures > 0) e.chi_f = chi_f(d.n, d.sig.b(), d.c);
  return e;
}

ValidationReport validate(const MultisectionDiagram& d, Effort effort) {
  if (d.n < 3 || (int)d.sectors.size() != d.n)
    throw std::invalid_argument("validate: malformed multisection structure");
  ValidationReport rep;
  rep.pairs.resize(d.n);
  if (effort == Effort::Structural) return rep;
  for (int i = 0; i < d.n; ++i) {
    const TangleData& prev = d.sectors[(i + d.n - 1) % d.n];
    const TangleData& cur = d.sectors[i];
    auto m = intersection_matrix(prev.cut_system, cur.cut_system);
    int rank = matrix_rank(m);
    // H1 of the splitting must be free of rank k_i: the gcd of rank-sized
    // minors carries the torsion
    if (rank > 0 && minor_gcd(m, rank) != 1) {
      rep.pairs[i] = {PairStatus::Failed, "splitting homology has torsion"};
      rep.ok = false;
      continue;
    }
    if (d.sig.genus - rank != d.k[i]) {
      rep.pairs[i] = {PairStatus::Failed, "k inconsistent with intersection rank"};
      rep.ok = false;
      continue;
    }
    if (effort == Effort::Full)
      rep.pairs[i] = full_pair_check(prev, cur, d.k[i]);
  }
  return rep;
}

std::vector<ReducingCurve> find_reducing_curves(const MultisectionDiagram& d, int weight_bound,
                                                int slide_budget) {
  const Triangulation& T = *d.T;
  // per sector, the shadow representatives reachable within the slide budget;
  // a c-disk only needs to avoid one of them
  std::vector<std::vector<ShadowSystem>> reps(d.n);
  for (int s = 0; s < d.n; ++s) {
    reps[s].push_back(d.sectors[s].shadows);
    std::set<std::vector<std::vector<int>>> seen_sys{d.sectors[s].shadows.key()};
    size_t lo = 0, hi = 1;
    for (int depth = 0; depth < slide_budget; ++depth) {
      for (size_t a = lo; a < hi; ++a) {
        TangleData cur{d.sectors[s].cut_system, reps[s][a]};
        for (ShadowSystem& next : shadow_slides(cur, weight_bound))
          if (seen_sys.insert(next.key()).second) reps[s].push_back(std::move(next));
      }
      lo = hi;
      hi = reps[s].size();
    }
  }
  auto sector_kind = [&](const MultiCurve& x, int s) {
    for (const ShadowSystem& sys : reps[s]) {
      CDiskKind kd = c_disk_kind(x, TangleData{d.sectors[s].cut_system, sys});
      if (kd != CDiskKind::None) return kd;
    }
    return CDiskKind::None;
  };

  std::vector<ReducingCurve> out;
  std::set<std::vector<int>> seen;
  auto consider = [&](const MultiCurve& cand) {
    if (cand.empty() || cand.component_count() != 1 || !is_essential(cand)) return;
    if (seen.count(cand.weights())) return;
    std::vector<CDiskKind> kinds;
    for (int s = 0; s < d.n; ++s) {
      CDiskKind kd = sector_kind(cand, s);
      if (kd == CDiskKind::None) return;
      kinds.push_back(kd);
    }
    seen.insert(cand.weights());
    out.push_back({cand, classify_kind(cand, kinds), std::move(kinds)});
  };

  const auto& all = enumerate_curves(T, weight_bound);
  int m = (int)all.size();
  std::vector<std::vector<CDiskKind>> kinds_all(m);
  for (int i = 0; i < m; ++i) {
    kinds_all[i].reserve(d.n);
    for (int s = 0; s < d.n; ++s) kinds_all[i].push_back(sector_kind(all[i], s));
    consider(all[i]);
  }

  // stabilizing pairs: x, y meeting once whose compressing sectors cover the
  // diagram; the boundary of a neighborhood of the union is then reducing
  std::vector<int> partial;
  for (int i = 0; i < m; ++i) {
    bool some = false, each = true;
    for (CDiskKind kd : kinds_all[i]) {
      if (kd == CDiskKind::Compressing) some = true;
      else each = false;
    }
    if (some && !each) partial.push_back(i);
  }
  for (int a = 0; a < (int)partial.size(); ++a)
    for (int b = a + 1; b < (int)partial.size(); ++b) {
      int x = partial[a], y = partial[b];
      bool covered = true;
      for (int s = 0; s < d.n; ++s)
        if (kinds_all[x][s] != CDiskKind::Compressing &&
            kinds_all[y][s] != CDiskKind::Compressing)
          covered = false;
      if (!covered) continue;
      if (geometric_intersection_cached(all[x], all[y]) != 1) continue;
      consider(boundary_of_neighborhood(T, {all[x], all[y]}, {}));
    }

  // almost-reducible curves: compressing everywhere except one sector where
  // the word is trivial but two distinct arcs are crossed once; pushing the
  // curve through an end of either arc yields a cut-everywhere curve
  for (int i = 0; i < m; ++i) {
    int bad = -1;
    bool rest_ok = true;
    for (int s = 0; s < d.n; ++s) {
      if (kinds_all[i][s] == CDiskKind::Compressing) continue;
      if (bad >= 0) rest_ok = false;
      bad = s;
    }
    if (bad < 0 || !rest_ok) continue;
    const TangleData& t = d.sectors[bad];
    if (!bounds_disk_in_handlebody(all[i], t.cut_system)) continue;
    std::vector<const Arc*> once;
    bool clean = true;
    for (const Arc& arc : t.shadows.arcs) {
      int cr = geometric_intersection(all[i], arc);
      if (cr == 1) once.push_back(&arc);
      else if (cr != 0) clean = false;
    }
    if (!clean || once.size() != 2) continue;
    for (const Arc* arc : once)
      for (const MultiCurve& comp :
           components_of(boundary_of_neighborhood(T, {all[i]}, {*arc})))
        consider(comp);
  }

  std::sort(out.begin(), out.end(), [](const ReducingCurve& a, const ReducingCurve& b) {
    return a.curve.weights() < b.curve.weights();
  });
  return out;
}

ReduceResult c_reduce(const MultisectionDiagram& d, const ReducingCurve& r) {
  for (const TangleData& t : d.sectors)
    if (c_disk_kind(r.curve, t) == CDiskKind::None)
      throw std::invalid_argument("c_reduce: curve is not reducing for this diagram");
  for (const Provenance& p : d.provenance) {
    if (!is_isotopic(p.curve, r.curve)) continue;
    ReduceResult res;
    res.ok = true;
    for (const DiagramPtr& s : p.summands) res.pieces.push_back(*s);
    return res;
  }
  ReduceResult res;
  res.note = "no construction provenance for this reducing curve";
  return res;
}

DecompositionTree decompose_completely(const MultisectionDiagram& d, int weight_bound,
                                       int slide_budget) {
  DecompositionTree tree;
  tree.verdict = DecompositionTree::Verdict::CompletelyDecomposable;
  auto menu = [](SurfaceSignature s) {
    return (s.genus == 0 && s.punctures == 2) || (s.genus == 0 && s.punctures == 4) ||
           (s.genus == 1 && s.punctures == 0);
  };
  auto rec = [&](auto&& self, MultisectionDiagram cur, int parent) -> void {
    int id = (int)tree.nodes.size();
    tree.nodes.push_back({std::move(cur), parent, {}, false, ""});
    if (parent >= 0) tree.nodes[parent].children.push_back(id);
    MultisectionDiagram& node = tree.nodes[id].diagram;
    if (menu(node.sig)) {
      tree.nodes[id].standard_leaf = true;
      return;
    }
    auto rs = find_reducing_curves(node, weight_bound, slide_budget);
    if (rs.empty()) {
      tree.nodes[id].note = "c-irreducible at the weight bound";
      tree.verdict = DecompositionTree::Verdict::Stuck;
      tree.stuck_leaves.push_back(id);
      return;
    }
    for (const ReducingCurve& r : rs) {
      ReduceResult red = c_reduce(node, r);
      if (!red.ok) continue;
      for (MultisectionDiagram& piece : red.pieces) self(self, std::move(piece), id);
      return;
    }
    tree.nodes[id].note = "reducing curves found but none carries provenance";
    tree.verdict = DecompositionTree::Verdict::Stuck;
    tree.stuck_leaves.push_back(id);
  };
  rec(rec, d, -1);
  return tree;
}

}  // namespace multisec
