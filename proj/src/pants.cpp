#include "multisec/pants.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace multisec {

namespace {

void sort_canonical(PantsDecomposition& P) {
  int n = (int)P.curves.size();
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return P.curves[a].weights() < P.curves[b].weights(); });
  std::vector<MultiCurve> cs;
  std::vector<MultiCurve> hints;
  std::vector<CutComponent> sup;
  for (int i : idx) {
    cs.push_back(P.curves[i]);
    if ((int)P.dual_hints.size() == n) hints.push_back(P.dual_hints[i]);
    if ((int)P.support_map.size() == n) sup.push_back(P.support_map[i]);
  }
  P.curves = std::move(cs);
  P.dual_hints = std::move(hints);
  P.support_map = std::move(sup);
}

bool complexity_one(const CutComponent& k) {
  int holes = k.punctures + k.boundaries;
  // the closed torus counts: its single-curve vertices have the whole
  // surface as support
  return (k.genus == 0 && holes == 4) || (k.genus == 1 && holes <= 1);
}

// the piece of the surface containing curve i once the others are removed:
// every other complementary piece is a pair of pants, so it is the unique
// complexity-one component of the cut
std::optional<CutComponent> support_piece(const PantsDecomposition& P, int i) {
  const Triangulation& T = *P.T;
  std::vector<MultiCurve> others;
  for (int j = 0; j < (int)P.curves.size(); ++j)
    if (j != i) others.push_back(P.curves[j]);
  if (others.empty()) {
    CutComponent whole;
    whole.genus = T.genus;
    whole.punctures = T.punctures;
    return complexity_one(whole) ? std::optional(whole) : std::nullopt;
  }
  std::optional<CutComponent> found;
  for (const CutComponent& k : cut_along_all(T, others).components)
    if (complexity_one(k)) {
      if (found) return std::nullopt;  // not a near-pants decomposition
      found = k;
    }
  return found;
}

// classify a replacement against the removed curve by intersection pattern;
// the support-piece constraints follow (a four-holed sphere has no curves of
// odd intersection, a one-holed torus none with i=2, alg=0)
std::optional<MoveKind> classify_move(const MultiCurve& old_c, const MultiCurve& new_c) {
  int gi = geometric_intersection_cached(old_c, new_c);
  if (gi == 1) return MoveKind::S;
  if (gi == 2 && algebraic_intersection(old_c, new_c) == 0) return MoveKind::A;
  // any other distinct replacement is still a dual graph edge
  if (gi > 0 || !is_isotopic(old_c, new_c)) return MoveKind::DUAL;
  return std::nullopt;
}

// candidate replacements for curve i via twist words in the removed curve and
// its hint partner (slope enumeration in the supporting piece)
std::vector<MultiCurve> twist_candidates(const PantsDecomposition& P, int i,
                                         int weight_bound) {
  std::vector<MultiCurve> twisters{P.curves[i]};
  if ((int)P.dual_hints.size() == (int)P.curves.size() &&
      !P.dual_hints[i].empty())
    twisters.push_back(P.dual_hints[i]);
  std::set<std::vector<int>> seen;
  std::vector<MultiCurve> out;
  std::deque<MultiCurve> work;
  for (const MultiCurve& t : twisters) {
    if (seen.insert(t.weights()).second) {
      out.push_back(t);
      work.push_back(t);
    }
  }
  while (!work.empty()) {
    MultiCurve cur = std::move(work.front());
    work.pop_front();
    for (const MultiCurve& t : twisters)
      for (int n : {1, -1}) {
        MultiCurve next = dehn_twist(cur, t, n);
        if (next.total_weight() > weight_bound) continue;
        if (seen.insert(next.weights()).second) {
          out.push_back(next);
          work.push_back(next);
        }
      }
  }
  return out;
}

const int kExhaustiveEdgeLimit = 12;

// used by neighbor generation / search, where the move conditions (essential
// replacement, disjoint from and non-isotopic to the retained curves) already
// guarantee a valid decomposition: an essential non-boundary-parallel curve
// cuts a four-holed sphere or one-holed torus into pants
PantsDecomposition apply_move_trusted(const PantsDecomposition& P, const Move& m) {
  PantsDecomposition Q = P;
  const MultiCurve old_c = P.curves[m.replaced];
  Q.curves[m.replaced] = m.replacement;
  Q.support_map.clear();
  if (Q.dual_hints.size() == Q.curves.size() &&
      geometric_intersection_cached(old_c, m.replacement) > 0)
    Q.dual_hints[m.replaced] = old_c;
  sort_canonical(Q);
  return Q;
}

}  // namespace

std::vector<std::vector<int>> PantsDecomposition::key() const {
  std::vector<std::vector<int>> k;
  for (const MultiCurve& c : curves) k.push_back(c.weights());
  std::sort(k.begin(), k.end());
  return k;
}

PantsCheck validate(PantsDecomposition& P) {
  auto fail = [](std::string why) { return PantsCheck{false, std::move(why)}; };
  if (!P.T) return fail("no surface");
  const Triangulation& T = *P.T;
  SurfaceSignature sig{T.genus, T.punctures};
  if ((int)P.curves.size() != sig.pants_count()) return fail("wrong count");
  for (const MultiCurve& c : P.curves) {
    if (c.tri() != &T) return fail("curve on a different surface");
    if (c.component_count() != 1) return fail("disconnected curve");
    if (!is_essential(c)) return fail("inessential curve");
  }
  int n = (int)P.curves.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (geometric_intersection_cached(P.curves[i], P.curves[j]) != 0)
        return fail("curves intersect");
      if (is_isotopic(P.curves[i], P.curves[j])) return fail("isotopic pair");
    }
  // on the closed torus the single curve leaves an annulus, not pants
  int want_holes = (sig.genus == 1 && sig.punctures == 0) ? 2 : 3;
  for (const CutComponent& k : cut_along_all(T, P.curves).components)
    if (k.genus != 0 || k.punctures + k.boundaries != want_holes)
      return fail("complement is not a union of pants");
  P.support_map.clear();
  for (int i = 0; i < n; ++i) {
    auto sup = support_piece(P, i);
    if (!sup) return fail("no complexity-one support piece");
    P.support_map.push_back(*sup);
  }
  return {};
}

PantsDecomposition make_pants(const Triangulation& T, std::vector<MultiCurve> curves,
                              std::vector<MultiCurve> dual_hints) {
  PantsDecomposition P;
  P.T = &T;
  P.curves = std::move(curves);
  P.dual_hints = std::move(dual_hints);
  sort_canonical(P);
  PantsCheck ck = validate(P);
  if (!ck.ok) throw std::invalid_argument("make_pants: " + ck.reason);
  return P;
}

PantsDecomposition apply_move(const PantsDecomposition& P, const Move& m) {
  int n = (int)P.curves.size();
  if (m.replaced < 0 || m.replaced >= n)
    throw std::invalid_argument("apply_move: bad index");
  const MultiCurve& old_c = P.curves[m.replaced];
  int gi = geometric_intersection_cached(old_c, m.replacement);
  switch (m.kind) {
    case MoveKind::S:
      if (gi != 1) throw std::invalid_argument("apply_move: S-move needs i(old,new)=1");
      break;
    case MoveKind::A:
      if (gi != 2 || algebraic_intersection(old_c, m.replacement) != 0)
        throw std::invalid_argument("apply_move: A-move needs i=2, alg=0");
      break;
    case MoveKind::DUAL:
      // any edge of the dual curve graph: only distinctness is required here
      if (gi == 0 && is_isotopic(old_c, m.replacement))
        throw std::invalid_argument("apply_move: replacement isotopic to removed curve");
      break;
  }
  if (m.kind == MoveKind::A || m.kind == MoveKind::S) {
    std::optional<CutComponent> sup;
    if ((int)P.support_map.size() == n) sup = P.support_map[m.replaced];
    else sup = support_piece(P, m.replaced);
    if (!sup) throw std::invalid_argument("apply_move: no support piece");
    int holes = sup->punctures + sup->boundaries;
    bool four_holed = sup->genus == 0 && holes == 4;
    if (m.kind == MoveKind::A && !four_holed)
      throw std::invalid_argument("apply_move: A-move outside a four-holed sphere");
    if (m.kind == MoveKind::S && four_holed)
      throw std::invalid_argument("apply_move: S-move outside a one-holed torus");
  }
  PantsDecomposition Q = P;
  Q.curves[m.replaced] = m.replacement;
  Q.support_map.clear();
  if ((int)Q.dual_hints.size() == n &&
      geometric_intersection_cached(old_c, m.replacement) > 0)
    Q.dual_hints[m.replaced] = old_c;
  sort_canonical(Q);
  PantsCheck ck = validate(Q);
  if (!ck.ok) throw std::invalid_argument("apply_move: result invalid: " + ck.reason);
  return Q;
}

std::optional<Move> move_between(const PantsDecomposition& P, const PantsDecomposition& Q) {
  if (P.T != Q.T || P.curves.size() != Q.curves.size()) return std::nullopt;
  auto contains = [](const PantsDecomposition& D, const MultiCurve& c) {
    for (const MultiCurve& x : D.curves)
      if (x.weights() == c.weights()) return true;
    return false;
  };
  int pi = -1, qi = -1, pn = 0, qn = 0;
  for (int i = 0; i < (int)P.curves.size(); ++i)
    if (!contains(Q, P.curves[i])) pi = i, ++pn;
  for (int i = 0; i < (int)Q.curves.size(); ++i)
    if (!contains(P, Q.curves[i])) qi = i, ++qn;
  if (pn != 1 || qn != 1) return std::nullopt;
  auto kind = classify_move(P.curves[pi], Q.curves[qi]);
  if (!kind) return std::nullopt;
  Move m{*kind, pi, Q.curves[qi]};
  try {
    if (apply_move(P, m).key() != Q.key()) return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return m;
}

std::vector<Move> neighbor_moves(const PantsDecomposition& P, PantsGraph graph,
                                 int weight_bound) {
  const Triangulation& T = *P.T;
  int n = (int)P.curves.size();
  for (const MultiCurve& c : P.curves)
    if (c.total_weight() > weight_bound)
      throw std::invalid_argument("neighbor_moves: weight bound below current curves");
  std::vector<Move> out;
  for (int i = 0; i < n; ++i) {
    const MultiCurve& old_c = P.curves[i];
    const std::vector<MultiCurve>* cands;
    std::vector<MultiCurve> local;
    if (T.num_edges() <= kExhaustiveEdgeLimit) {
      cands = &enumerate_curves(T, weight_bound);
    } else {
      local = twist_candidates(P, i, weight_bound);
      cands = &local;
    }
    for (const MultiCurve& c : *cands) {
      bool clear = true;
      for (int j = 0; j < n && clear; ++j) {
        if (j == i) continue;
        if (geometric_intersection_cached(c, P.curves[j]) != 0 ||
            is_isotopic(c, P.curves[j]))
          clear = false;
      }
      if (!clear) continue;
      auto kind = classify_move(old_c, c);
      if (!kind) continue;
      if (graph == PantsGraph::PANTS && *kind == MoveKind::DUAL) continue;
      out.push_back({*kind, i, c});
    }
  }
  return out;
}

std::vector<PantsDecomposition> neighbors(const PantsDecomposition& P, PantsGraph graph,
                                          int weight_bound) {
  std::vector<PantsDecomposition> out;
  for (const Move& m : neighbor_moves(P, graph, weight_bound))
    out.push_back(apply_move_trusted(P, m));
  return out;
}

PantsDistance pants_distance(const PantsDecomposition& P, const PantsDecomposition& Q,
                             PantsGraph graph, int weight_bound, int radius_bound) {
  if (P.T != Q.T) throw std::invalid_argument("pants_distance: different surfaces");
  {
    PantsDecomposition p = P, q = Q;
    PantsCheck cp = validate(p), cq = validate(q);
    if (!cp.ok || !cq.ok)
      throw std::invalid_argument("pants_distance: invalid endpoint: " +
                                  (cp.ok ? cq.reason : cp.reason));
  }
  using Key = std::vector<std::vector<int>>;
  struct NodeRec {
    PantsDecomposition P;
    Key parent;
    Move from_parent;  // forward side: parent -> node; backward: node -> parent
    int depth = 0;
  };
  bool exhaustive = P.T->num_edges() <= kExhaustiveEdgeLimit;
  auto finish = [&](int d, std::vector<Move> path) {
    PantsDistance r;
    r.status = exhaustive ? PantsDistance::Status::Exact
                          : PantsDistance::Status::UpperBound;
    r.d = d;
    r.path = std::move(path);
    return r;
  };

  Key kp = P.key(), kq = Q.key();
  if (kp == kq) return finish(0, {});

  std::map<Key, NodeRec> vis[2];
  std::vector<Key> frontier[2];
  vis[0][kp] = {P, {}, {}, 0};
  vis[1][kq] = {Q, {}, {}, 0};
  frontier[0] = {kp};
  frontier[1] = {kq};
  int depth[2] = {0, 0};

  // forward move list P -> node
  auto chain_forward = [&](Key k) {
    std::vector<Move> ms;
    while (k != kp) {
      const NodeRec& r = vis[0].at(k);
      ms.push_back(r.from_parent);
      k = r.parent;
    }
    std::reverse(ms.begin(), ms.end());
    return ms;
  };
  // move list node -> Q: invert the stored Q -> node chain
  auto chain_backward = [&](Key k) {
    std::vector<Move> ms;
    while (k != kq) {
      const NodeRec& r = vis[1].at(k);
      // r.from_parent turned parent into node; find the index of the curve it
      // replaced inside node's canonical order to state the inverse move
      const PantsDecomposition& parent = vis[1].at(r.parent).P;
      const MultiCurve& put_back = parent.curves[r.from_parent.replaced];
      int idx = -1;
      for (int i = 0; i < (int)r.P.curves.size(); ++i)
        if (r.P.curves[i].weights() == r.from_parent.replacement.weights()) idx = i;
      if (idx < 0) throw std::logic_error("pants_distance: lost backward move");
      ms.push_back({r.from_parent.kind, idx, put_back});
      k = r.parent;
    }
    return ms;
  };
  auto splice = [&](Key meet) {
    std::vector<Move> ms = chain_forward(meet);
    for (Move& m : chain_backward(meet)) ms.push_back(std::move(m));
    int d = (int)ms.size();
    return finish(d, std::move(ms));
  };

  std::optional<Key> best_meet;
  int best_d = 0;
  auto sweep = [&](int side) {
    std::vector<Key> next;
    for (const Key& k : frontier[side]) {
      PantsDecomposition cur = vis[side].at(k).P;
      for (const Move& m : neighbor_moves(cur, graph, weight_bound)) {
        PantsDecomposition nb = apply_move_trusted(cur, m);
        Key nk = nb.key();
        if (vis[side].count(nk)) continue;
        vis[side][nk] = {std::move(nb), k, m, depth[side] + 1};
        next.push_back(nk);
        auto other = vis[1 - side].find(nk);
        if (other != vis[1 - side].end()) {
          int d = depth[side] + 1 + other->second.depth;
          if (!best_meet || d < best_d) {
            best_meet = nk;
            best_d = d;
          }
        }
      }
    }
    ++depth[side];
    frontier[side] = std::move(next);
  };
  while (depth[0] + depth[1] < radius_bound) {
    int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    if (frontier[side].empty()) break;  // this side's ball is closed: no path
    sweep(side);
    if (best_meet) {
      // alternating expansion can overshoot by one level; one extra sweep of
      // the other side settles the minimum
      if (best_d > depth[0] + depth[1] && !frontier[1 - side].empty())
        sweep(1 - side);
      PantsDistance r = splice(*best_meet);
      if (best_d > depth[0] + depth[1] && r.status == PantsDistance::Status::Exact)
        r.status = PantsDistance::Status::UpperBound;  // could not settle
      return r;
    }
  }
  PantsDistance r;
  r.status = PantsDistance::Status::NotFoundWithin;
  r.d = radius_bound;
  return r;
}

}  // namespace multisec
