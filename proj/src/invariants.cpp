#include "multisec/invariants.hpp"
#include "multisec/surface.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace multisec {

int efficient_distance_formula(int g, int k, int b, int c) {
  if (k < 0 || g < k || c < 0 || b < c)
    throw std::invalid_argument("efficient_distance_formula: needs g >= k >= 0 and b >= c >= 0");
  return g - k + b - c;
}

namespace {

// the complexities of the splitting between sectors i and i+1 live at slot
// (i+1) mod n of d.k / d.c
int pair_k(const MultisectionDiagram& d, int i) { return d.k[(i + 1) % d.n]; }
int pair_c(const MultisectionDiagram& d, int i) { return d.c[(i + 1) % d.n]; }

bool same_curve(const MultiCurve& a, const MultiCurve& b) { return a.weights() == b.weights(); }

// Lemma-style witness audit: replay the geodesic and check the move counts,
// the move-once property, that only compressing curves move, and the A-move
// endpoint conditions against the two tangles
bool witness_ok(const MultisectionDiagram& d, int sector, const PantsDecomposition& P,
                const PantsDecomposition& Q, const std::vector<Move>& path) {
  int j = (sector + 1) % d.n;
  const TangleData& left_t = d.sectors[sector];
  const TangleData& right_t = d.sectors[j];
  int want_s = d.sig.genus - pair_k(d, sector);
  int want_a = d.sig.b() - pair_c(d, sector);

  PantsDecomposition cur = P;
  std::vector<int> origin(cur.curves.size());  // -1 marks an introduced curve
  std::iota(origin.begin(), origin.end(), 0);
  int s_moves = 0, a_moves = 0;
  for (const Move& m : path) {
    if (m.kind == MoveKind::S) ++s_moves;
    else if (m.kind == MoveKind::A) ++a_moves;
    else return false;
    if (origin[m.replaced] < 0) return false;  // some curve moved twice
    const MultiCurve old_c = cur.curves[m.replaced];
    if (c_disk_kind(old_c, left_t) != CDiskKind::Compressing) return false;
    if (c_disk_kind(m.replacement, right_t) != CDiskKind::Compressing) return false;
    if (m.kind == MoveKind::A) {
      if (!bounds_disk_in_handlebody(old_c, left_t.cut_system)) return false;
      if (!bounds_disk_in_handlebody(old_c, right_t.cut_system)) return false;
      if (c_disk_kind(old_c, right_t) != CDiskKind::None) return false;
    }
    PantsDecomposition nxt = apply_move(cur, m);
    std::vector<int> norigin(nxt.curves.size(), -1);
    for (int a = 0; a < (int)nxt.curves.size(); ++a) {
      if (same_curve(nxt.curves[a], m.replacement)) continue;
      for (int b = 0; b < (int)cur.curves.size(); ++b)
        if (b != m.replaced && same_curve(nxt.curves[a], cur.curves[b])) {
          norigin[a] = origin[b];
          break;
        }
    }
    cur = std::move(nxt);
    origin = std::move(norigin);
  }
  if (s_moves != want_s || a_moves != want_a) return false;
  if (cur.key() != Q.key()) return false;
  // endpoint conditions: every curve of P meets at most one curve of Q, and
  // then in one or two points
  for (const MultiCurve& x : P.curves) {
    int partners = 0;
    for (const MultiCurve& y : Q.curves) {
      int gi = geometric_intersection_cached(x, y);
      if (gi == 0) continue;
      if (gi > 2) return false;
      ++partners;
    }
    if (partners > 1) return false;
  }
  return true;
}

}  // namespace

std::vector<EfficientPair> find_efficient_pairs(const MultisectionDiagram& d, int sector,
                                                int weight_bound) {
  if (sector < 0 || sector >= d.n) throw std::invalid_argument("find_efficient_pairs: bad sector");
  int j = (sector + 1) % d.n;
  int D = efficient_distance_formula(d.sig.genus, pair_k(d, sector), d.sig.b(), pair_c(d, sector));
  std::vector<PantsDecomposition> Di = enumerate_disk_set(d.sectors[sector], weight_bound);
  std::vector<PantsDecomposition> Dj = enumerate_disk_set(d.sectors[j], weight_bound);
  if (Di.empty() || Dj.empty())
    throw std::runtime_error("find_efficient_pairs: empty disk set at the weight bound");
  std::vector<EfficientPair> out;
  for (const PantsDecomposition& P : Di)
    for (const PantsDecomposition& Q : Dj) {
      if (P.key() == Q.key()) {
        if (D == 0) out.push_back({P, Q, sector, 0, {}});
        continue;
      }
      if (D == 0) continue;
      PantsDistance r = pants_distance(P, Q, PantsGraph::DUAL_CURVE, weight_bound, D);
      if (r.status == PantsDistance::Status::NotFoundWithin || r.d != D) continue;
      if (!witness_ok(d, sector, P, Q, r.path)) continue;
      out.push_back({P, Q, sector, D, r.path});
    }
  return out;
}

namespace {

using DistKey = std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>;

// the boundary pair between islands i and i+1 is efficient iff its dual
// graph distance equals the formula value
bool boundary_pair_efficient(const MultisectionDiagram& d, int i, const PantsDecomposition& exit,
                             const PantsDecomposition& entry, int weight_bound) {
  int D = efficient_distance_formula(d.sig.genus, pair_k(d, i), d.sig.b(), pair_c(d, i));
  if (exit.key() == entry.key()) return D == 0;
  if (D == 0) return false;
  PantsDistance r = pants_distance(exit, entry, PantsGraph::DUAL_CURVE, weight_bound, D);
  return r.status != PantsDistance::Status::NotFoundWithin && r.d == D;
}

}  // namespace

CertificateCheck verify_certificate(const MultisectionDiagram& d, const LoopCertificate& cert,
                                    PantsGraph graph, int weight_bound, int slide_budget) {
  auto invalid = [](std::string why) { return CertificateCheck{false, -1, std::move(why)}; };
  if (cert.graph != graph) return invalid("certificate graph tag disagrees with the query");
  if ((int)cert.islands.size() != d.n) return invalid("island count differs from sector count");
  int total = 0;
  for (int i = 0; i < d.n; ++i) {
    const IslandPath& isl = cert.islands[i];
    if (isl.sector != i) return invalid("islands out of cyclic sector order");
    if (isl.vertices.empty()) return invalid("empty island path");
    for (const PantsDecomposition& v : isl.vertices) {
      if (v.T != d.T) return invalid("certificate vertex on the wrong surface");
      PantsDecomposition copy = v;
      PantsCheck ck = validate(copy);
      if (!ck.ok) return invalid("certificate vertex is not a pants decomposition: " + ck.reason);
    }
    if (!in_disk_set(isl.vertices.front(), d.sectors[i], slide_budget))
      return invalid("island entry vertex outside its disk set");
    if (!in_disk_set(isl.vertices.back(), d.sectors[i], slide_budget))
      return invalid("island exit vertex outside its disk set");
    for (size_t s = 0; s + 1 < isl.vertices.size(); ++s) {
      std::optional<Move> m = move_between(isl.vertices[s], isl.vertices[s + 1]);
      if (!m) return invalid("consecutive island vertices are not adjacent");
      if (graph == PantsGraph::PANTS && m->kind == MoveKind::DUAL)
        return invalid("island edge is not a pants graph move");
    }
    total += (int)isl.vertices.size() - 1;
  }
  for (int i = 0; i < d.n; ++i) {
    const PantsDecomposition& exit = cert.islands[i].vertices.back();
    const PantsDecomposition& entry = cert.islands[(i + 1) % d.n].vertices.front();
    if (!boundary_pair_efficient(d, i, exit, entry, weight_bound))
      return invalid("boundary pair between islands is not efficient");
  }
  if (total != cert.claimed_total) return invalid("claimed total differs from the path lengths");
  return {true, total, ""};
}

UpperSearch lstar_upper_search(const MultisectionDiagram& d, int weight_bound,
                               int length_budget, PantsGraph graph, int slide_budget) {
  const int kInf = INT_MAX / 4;
  int n = d.n;
  std::vector<std::vector<PantsDecomposition>> Ds(n);
  for (int i = 0; i < n; ++i) {
    Ds[i] = slide_budget > 0 ? enumerate_disk_set(d.sectors[i], weight_bound, slide_budget)
                             : enumerate_disk_set(d.sectors[i], weight_bound);
    if (Ds[i].empty()) return {};
  }
  // admissible boundary pairs (exit index in Ds[i], entry index in Ds[i+1])
  struct BPair { int exit, entry; };
  std::vector<std::vector<BPair>> bp(n);
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    for (int a = 0; a < (int)Ds[i].size(); ++a)
      for (int b = 0; b < (int)Ds[j].size(); ++b)
        if (boundary_pair_efficient(d, i, Ds[i][a], Ds[j][b], weight_bound))
          bp[i].push_back({a, b});
    if (bp[i].empty()) return {};
  }
  // within-island connection costs in the certificate graph, memoized
  std::map<std::tuple<int, int, int>, PantsDistance> memo;
  auto island_cost = [&](int isl, int entry, int exit) -> int {
    if (entry == exit) return 0;
    auto it = memo.find({isl, entry, exit});
    if (it == memo.end()) {
      PantsDistance r =
          pants_distance(Ds[isl][entry], Ds[isl][exit], graph, weight_bound, length_budget);
      it = memo.emplace(std::make_tuple(isl, entry, exit), std::move(r)).first;
    }
    const PantsDistance& r = it->second;
    return r.status == PantsDistance::Status::NotFoundWithin ? kInf : r.d;
  };
  // cyclic assignment of one efficient pair per boundary, minimizing the sum
  // of within-island distances
  int best_total = kInf;
  std::vector<int> best_choice;
  for (int c0 = 0; c0 < (int)bp[0].size(); ++c0) {
    std::vector<std::vector<int>> dp(n), from(n);
    dp[0].assign(bp[0].size(), kInf);
    from[0].assign(bp[0].size(), -1);
    dp[0][c0] = 0;
    for (int b = 1; b < n; ++b) {
      dp[b].assign(bp[b].size(), kInf);
      from[b].assign(bp[b].size(), -1);
      for (int cb = 0; cb < (int)bp[b].size(); ++cb)
        for (int cp = 0; cp < (int)bp[b - 1].size(); ++cp) {
          if (dp[b - 1][cp] >= kInf) continue;
          int w = island_cost(b, bp[b - 1][cp].entry, bp[b][cb].exit);
          if (w >= kInf) continue;
          if (dp[b - 1][cp] + w < dp[b][cb]) {
            dp[b][cb] = dp[b - 1][cp] + w;
            from[b][cb] = cp;
          }
        }
    }
    for (int cl = 0; cl < (int)bp[n - 1].size(); ++cl) {
      if (dp[n - 1][cl] >= kInf) continue;
      int w = island_cost(0, bp[n - 1][cl].entry, bp[0][c0].exit);
      if (w >= kInf) continue;
      int total = dp[n - 1][cl] + w;
      if (total < best_total) {
        best_total = total;
        best_choice.assign(n, -1);
        best_choice[n - 1] = cl;
        for (int b = n - 1; b > 0; --b) best_choice[b - 1] = from[b][best_choice[b]];
      }
    }
  }
  if (best_total > length_budget) return {};
  UpperSearch res;
  res.found = true;
  res.cert.graph = graph;
  res.cert.claimed_total = best_total;
  for (int i = 0; i < n; ++i) {
    int entry = bp[(i + n - 1) % n][best_choice[(i + n - 1) % n]].entry;
    int exit = bp[i][best_choice[i]].exit;
    IslandPath isl;
    isl.sector = i;
    isl.vertices.push_back(Ds[i][entry]);
    if (entry != exit) {
      island_cost(i, entry, exit);  // ensure the path is memoized
      const PantsDistance& r = memo.at({i, entry, exit});
      PantsDecomposition cur = Ds[i][entry];
      for (const Move& m : r.path) {
        cur = apply_move(cur, m);
        isl.vertices.push_back(cur);
      }
    }
    res.cert.islands.push_back(std::move(isl));
  }
  return res;
}

static const char* kIrreducibilityHypothesis =
    "lower bound valid only for c-irreducible diagrams (check find_reducing_curves); "
    "minimality of (g,b) among all multisections is not certified";

LowerBound lower_bound_multisection(const MultisectionDiagram& d) {
  int g = d.sig.genus, b = d.sig.b();
  if ((g == 0 && b == 2) || (g == 1 && b == 0))
    throw std::invalid_argument(
        "lower_bound_multisection: the invariant vanishes for (0,2) and (1,0) diagrams");
  LowerBound out;
  out.hypothesis = kIrreducibilityHypothesis;
  if (g == 2 && b == 0) {
    out.value = 2;
    return out;
  }
  bool all_c_big = std::all_of(d.c.begin(), d.c.end(), [](int c) { return c > 1; });
  if (g > 0 || all_c_big) {
    int best = 0;
    for (int i = 0; i < d.n; ++i) best = std::max(best, g - d.k[i] + b - d.c[i]);
    out.value = 2 * best;
  } else {
    out.value = 2 * (b - 2);
  }
  return out;
}

LowerBound lower_bound_trisection(const MultisectionDiagram& d) {
  if (d.n != 3) throw std::invalid_argument("lower_bound_trisection: needs n = 3");
  int g = d.sig.genus, b = d.sig.b();
  int sk = std::accumulate(d.k.begin(), d.k.end(), 0);
  int sc = std::accumulate(d.c.begin(), d.c.end(), 0);
  int direct = 6 * g + 3 * b + sk + sc - 9;
  int euler = 7 * (g - 1) - chi_x(3, g, d.k) + 4 * b + chi_f(3, b, d.c);
  if (direct != euler)
    throw std::logic_error("lower_bound_trisection: the two bound forms disagree");
  return {direct, kIrreducibilityHypothesis};
}

SmallLstarReport small_lstar_detector(const MultisectionDiagram& d, int weight_bound,
                                      int slide_budget) {
  DecompositionTree tree = decompose_completely(d, weight_bound, slide_budget);
  if (tree.verdict == DecompositionTree::Verdict::CompletelyDecomposable)
    return {0, "completely decomposable: no bound emitted"};
  auto small_menu = [](SurfaceSignature s) {
    int g = s.genus, b = s.b();
    return (g == 0 && b >= 1 && b <= 3) || (g == 1 && b <= 1) || (g == 2 && b == 0);
  };
  for (int id : tree.stuck_leaves) {
    const DecompositionTree::Node& nd = tree.nodes[id];
    if (nd.note == "c-irreducible at the weight bound" && !small_menu(nd.diagram.sig))
      return {3,
              "not completely decomposable, and a c-irreducible piece falls outside the "
              "small-complexity menu for invariant two"};
  }
  return {2, "not completely decomposable at the weight bound"};
}

CommonCurve no_common_curve_check(const PantsDecomposition& P, const PantsDecomposition& Pp,
                                  const PantsDecomposition& Q) {
  auto holds = [](const PantsDecomposition& D, const MultiCurve& c) {
    for (const MultiCurve& x : D.curves)
      if (is_isotopic(x, c)) return true;
    return false;
  };
  for (const MultiCurve& x : P.curves)
    if (holds(Pp, x) && holds(Q, x)) return CommonCurve::Obstructed;
  return CommonCurve::Clean;
}

namespace {

MultiCurve torus_slope(const Triangulation& T, int p, int q) {
  return MultiCurve::from_weights(T, {std::abs(q), std::abs(p), std::abs(p + q)});
}

}  // namespace

ArcType arc_type_classify(const Triangulation& T, const Arc& a, int n) {
  if (T.genus != 1 || T.punctures != 0)
    throw std::invalid_argument("arc_type_classify: needs the once-punctured torus model");
  if (n == 0) throw std::invalid_argument("arc_type_classify: the frame needs n != 0");
  // the arc's slope u*l + v*m: v from crossings with l, u from crossings
  // with m, relative sign settled against the (1,1) curve
  int v = geometric_intersection(torus_slope(T, 1, 0), a);
  int u = geometric_intersection(torus_slope(T, 0, 1), a);
  int diag = geometric_intersection(torus_slope(T, 1, 1), a);
  if (u > 0 && v > 0 && diag == u + v) u = -u;
  ArcType out;
  out.i = geometric_intersection(torus_slope(T, n, 1), a);
  out.j = geometric_intersection(torus_slope(T, 0, 1), a);
  auto matches = [&](int lu, int lv) {
    if (lv < 0 || (lv == 0 && lu < 0)) lu = -lu, lv = -lv;
    return u == lu && v == lv;
  };
  bool finite_type = (out.i <= 1 && out.j <= 1);
  if (finite_type && (u || v)) {
    if (matches(1, 0)) out.slope = "l";
    else if (matches(0, 1)) out.slope = "m";
    else if (matches(1, n)) out.slope = "l+nm";
    else if ((n == 1 || n == -1 || n == 2 || n == -2) && matches(1, 2 / n))
      out.slope = "l+(2/n)m";
  }
  return out;
}

Genus2Frame make_genus2_frame(Genus2Frame fr) {
  auto fail = [](const char* why) { throw std::invalid_argument(std::string("genus2 frame: ") + why); };
  if (!fr.T) fail("missing surface");
  if (fr.T->genus != 2 || fr.T->punctures != 0) fail("needs a closed genus two surface");
  if (!is_separating(fr.psi2) || !is_separating(fr.gamma2)) fail("psi2 and gamma2 must separate");
  if (geometric_intersection(fr.f, fr.fp) != 1) fail("f and f' must be dual");
  if (geometric_intersection(fr.f, fr.fpp) != 1) fail("f and f'' must be dual");
  if (geometric_intersection(fr.fp, fr.fpp) != std::abs(fr.n)) fail("i(f',f'') must equal n");
  if (geometric_intersection(fr.g, fr.gpp) != 1) fail("g and g'' must be dual");
  // the two pants decompositions of the frame must be disjoint triples
  const MultiCurve* q[3] = {&fr.f, &fr.gamma1, &fr.gamma2};
  const MultiCurve* p[3] = {&fr.g, &fr.psi1, &fr.psi2};
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      if (geometric_intersection(*q[a], *q[b]) != 0) fail("{f,gamma1,gamma2} must be disjoint");
      if (geometric_intersection(*p[a], *p[b]) != 0) fail("{g,psi1,psi2} must be disjoint");
    }
  if (geometric_intersection(fr.fp, fr.gamma2) != 0 ||
      geometric_intersection(fr.fpp, fr.gamma2) != 0)
    fail("f' and f'' must avoid gamma2");
  return fr;
}

Genus2Frame standard_genus2_frame(int n) {
  if (n < 1) throw std::invalid_argument("standard_genus2_frame: needs n >= 1");
  const StandardSurface& S = standard_surface({2, 0});
  Genus2Frame fr;
  fr.T = &S.T;
  fr.f = S.beta[1];
  fr.fpp = S.alpha[1];
  fr.fp = dehn_twist(S.alpha[1], S.beta[1], n);
  fr.g = S.alpha[0];
  fr.gpp = S.beta[0];
  fr.psi1 = S.alpha[1];
  fr.psi2 = S.delta[0];
  fr.gamma1 = S.alpha[0];
  fr.gamma2 = S.delta[0];
  fr.n = n;
  return make_genus2_frame(std::move(fr));
}

DualCurveClass classify_dual_curve(const MultiCurve& z, const Genus2Frame& fr) {
  if (geometric_intersection(z, fr.fp) != 1 || geometric_intersection(z, fr.fpp) != 1)
    throw std::invalid_argument("classify_dual_curve: z is not dual to the frame pair");
  DualCurveClass out;
  out.gamma2_crossings = geometric_intersection(z, fr.gamma2);
  if (out.gamma2_crossings % 2 || out.gamma2_crossings > 4)
    throw std::logic_error("classify_dual_curve: gamma2 crossings escape {0,2,4}");
  if (out.gamma2_crossings == 0) {
    out.type = DualCurveType::Type0;
  } else if (out.gamma2_crossings == 2) {
    out.type = DualCurveType::Type2;
  } else {
    out.type = DualCurveType::Type4;
    int geo = geometric_intersection(z, fr.gamma1);
    int alg = std::abs(algebraic_intersection(z, fr.gamma1));
    if (geo != alg || geo % 2)
      throw std::logic_error("classify_dual_curve: family (4) gamma1 condition fails");
    out.r = geo / 2;
  }
  return out;
}

namespace {

// an efficient pair of a (2,1)-splitting on a closed genus two surface:
// two shared curves (one separating, one not) and a dual moved pair
struct SplitPattern {
  bool ok = false;
  MultiCurve sep, nonsep, moved_l, moved_r;
};

SplitPattern split_pattern(const EfficientPair& e) {
  SplitPattern out;
  std::vector<const MultiCurve*> shared, only_l, only_r;
  for (const MultiCurve& x : e.left.curves) {
    bool found = false;
    for (const MultiCurve& y : e.right.curves)
      if (same_curve(x, y)) found = true;
    (found ? shared : only_l).push_back(&x);
  }
  for (const MultiCurve& y : e.right.curves) {
    bool found = false;
    for (const MultiCurve& x : e.left.curves)
      if (same_curve(x, y)) found = true;
    if (!found) only_r.push_back(&y);
  }
  if (shared.size() != 2 || only_l.size() != 1 || only_r.size() != 1) return out;
  bool s0 = is_separating(*shared[0]), s1 = is_separating(*shared[1]);
  if (s0 == s1) return out;
  if (geometric_intersection(*only_l[0], *only_r[0]) != 1) return out;
  out.ok = true;
  out.sep = s0 ? *shared[0] : *shared[1];
  out.nonsep = s0 ? *shared[1] : *shared[0];
  out.moved_l = *only_l[0];
  out.moved_r = *only_r[0];
  return out;
}

}  // namespace

FrameExtraction extract_genus2_frame(const MultisectionDiagram& d, int weight_bound) {
  auto unclassified = [](std::string why) {
    return FrameExtraction{false, {}, "UNCLASSIFIED: " + std::move(why)};
  };
  if (d.n != 4 || !(d.sig == SurfaceSignature{2, 0}))
    return unclassified("not a closed genus two quadrisection");
  for (int ki : d.k)
    if (ki != 1) return unclassified("not a (2,1)-quadrisection");
  std::vector<std::vector<EfficientPair>> pairs(4);
  for (int i = 0; i < 4; ++i) {
    pairs[i] = find_efficient_pairs(d, i, weight_bound);
    if (pairs[i].empty()) return unclassified("a boundary has no efficient pairs at the bound");
  }
  for (const EfficientPair& e01 : pairs[0]) {
    SplitPattern P = split_pattern(e01);  // left = {g,psi1,psi2}
    if (!P.ok) continue;
    for (const EfficientPair& e12 : pairs[1]) {
      SplitPattern Q = split_pattern(e12);  // right = {f,gamma1,gamma2}
      if (!Q.ok) continue;
      for (const EfficientPair& e23 : pairs[2]) {
        if (e23.left.key() != e12.right.key()) continue;
        SplitPattern R = split_pattern(e23);
        if (!R.ok || !same_curve(R.moved_l, Q.moved_r)) continue;
        for (const EfficientPair& e30 : pairs[3]) {
          if (e30.right.key() != e01.left.key()) continue;
          SplitPattern S = split_pattern(e30);
          if (!S.ok || !same_curve(S.moved_r, P.moved_l)) continue;
          Genus2Frame fr;
          fr.T = d.T;
          fr.f = Q.moved_r;       // moved curve of Q, shared by R
          fr.fp = Q.moved_l;      // its dual in Q'
          fr.fpp = R.moved_r;     // its dual in R'
          fr.g = P.moved_l;
          fr.gpp = S.moved_l;
          fr.psi1 = P.nonsep;
          fr.psi2 = P.sep;
          fr.gamma1 = Q.nonsep;
          fr.gamma2 = Q.sep;
          fr.n = geometric_intersection(fr.fp, fr.fpp);
          int m = geometric_intersection(P.moved_r, S.moved_l);
          if (m != fr.n) continue;  // the two twist parameters must agree
          try {
            return {true, make_genus2_frame(std::move(fr)), ""};
          } catch (const std::invalid_argument&) {
            continue;
          }
        }
      }
    }
  }
  return unclassified("no efficient-pair combination matches the frame pattern");
}

bool h1_vanishing_check(const std::vector<std::vector<long long>>& m) {
  if (m.size() != 2 || m[0].size() != 2 || m[1].size() != 2)
    throw std::invalid_argument("h1_vanishing_check: needs a 2x2 matrix");
  long long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return det == 1 || det == -1;
}

}  // namespace multisec
