#include <doctest.h>

#include "multisec/invariants.hpp"
#include "multisec/surface.hpp"

using namespace multisec;

namespace {

TangleData closed_sector(const Triangulation& T, std::vector<MultiCurve> cs) {
  return make_tangle(make_cut_system(T, std::move(cs)), make_shadow_system(T, {}));
}

// arc parallel to a triangulation edge
Arc edge_arc(const Triangulation& T, int edge) {
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

MultisectionDiagram torus_cp2() {
  const StandardSurface& S = standard_surface({1, 0});
  MultiCurve g = dehn_twist(S.beta[0], S.alpha[0], 1);
  return make_multisection(S.T, {closed_sector(S.T, {S.alpha[0]}),
                                 closed_sector(S.T, {S.beta[0]}),
                                 closed_sector(S.T, {g})});
}

MultisectionDiagram torus_s1xs3() {
  const StandardSurface& S = standard_surface({1, 0});
  return make_multisection(S.T, {closed_sector(S.T, {S.alpha[0]}),
                                 closed_sector(S.T, {S.alpha[0]}),
                                 closed_sector(S.T, {S.alpha[0]})});
}

MultiCurve torus_slope(const Triangulation& T, int p, int q) {
  return MultiCurve::from_weights(T, {std::abs(q), std::abs(p), std::abs(p + q)});
}

}  // namespace

TEST_CASE("efficient distance formula") {
  CHECK(efficient_distance_formula(2, 0, 0, 0) == 2);
  CHECK(efficient_distance_formula(1, 1, 1, 1) == 0);
  CHECK(efficient_distance_formula(0, 0, 3, 1) == 2);
  CHECK(efficient_distance_formula(1, 0, 1, 1) == 1);
  CHECK_THROWS_AS(efficient_distance_formula(1, 2, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(efficient_distance_formula(0, 0, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(efficient_distance_formula(1, -1, 0, 0), std::invalid_argument);
}

TEST_CASE("closed form lower bounds") {
  SUBCASE("trisection bound and its euler characteristic form agree") {
    LowerBound lb = lower_bound_trisection(torus_cp2());
    CHECK(lb.value == -3);  // 6 - 9: trivial for the smallest trisection
    CHECK(!lb.hypothesis.empty());
    CHECK(lower_bound_trisection(torus_s1xs3()).value == 0);
  }
  SUBCASE("multisection bound branches") {
    // (1,0) and (0,2) complexities are excluded
    CHECK_THROWS_AS(lower_bound_multisection(torus_cp2()), std::invalid_argument);
    const StandardSurface& S4 = standard_surface({0, 4});
    ShadowSystem chain = make_shadow_system(S4.T, {S4.shadows[0], S4.shadows[1]});
    auto bridge = [&](ShadowSystem sh) {
      return make_tangle(make_cut_system(S4.T, {}), std::move(sh));
    };
    MultisectionDiagram two_bridge =
        make_multisection(S4.T, {bridge(chain), bridge(chain), bridge(chain)});
    CHECK_THROWS_AS(lower_bound_multisection(two_bridge), std::invalid_argument);
    // (2,0) always reports two
    const StandardSurface& S2 = standard_surface({2, 0});
    MultisectionDiagram stable = make_multisection(
        S2.T, {closed_sector(S2.T, {S2.alpha[0], S2.alpha[1]}),
               closed_sector(S2.T, {S2.alpha[0], S2.alpha[1]}),
               closed_sector(S2.T, {S2.alpha[0], S2.alpha[1]})});
    CHECK(lower_bound_multisection(stable).value == 2);
    // three matching bridges on the sphere: all c = b, max branch gives zero
    const StandardSurface& S6 = standard_surface({0, 6});
    ShadowSystem chain3 =
        make_shadow_system(S6.T, {S6.shadows[0], S6.shadows[1], S6.shadows[2]});
    auto bridge6 = [&](ShadowSystem sh) {
      return make_tangle(make_cut_system(S6.T, {}), std::move(sh));
    };
    MultisectionDiagram three_bridge =
        make_multisection(S6.T, {bridge6(chain3), bridge6(chain3), bridge6(chain3)});
    CHECK(three_bridge.c == std::vector<int>{3, 3, 3});
    CHECK(lower_bound_multisection(three_bridge).value == 0);
  }
  SUBCASE("non trisections rejected by the trisection bound") {
    const StandardSurface& S = standard_surface({1, 0});
    MultisectionDiagram quad = make_multisection(
        S.T, {closed_sector(S.T, {S.alpha[0]}), closed_sector(S.T, {S.alpha[0]}),
              closed_sector(S.T, {S.alpha[0]}), closed_sector(S.T, {S.alpha[0]})});
    CHECK_THROWS_AS(lower_bound_trisection(quad), std::invalid_argument);
  }
}

TEST_CASE("homology vanishing determinant check") {
  CHECK(h1_vanishing_check({{0, 1}, {1, 5}}));
  CHECK(h1_vanishing_check({{0, 1}, {-1, 7}}));
  CHECK(!h1_vanishing_check({{0, 0}, {0, 1}}));
  CHECK(!h1_vanishing_check({{2, 0}, {0, 1}}));
  CHECK_THROWS_AS(h1_vanishing_check({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                  std::invalid_argument);
}

TEST_CASE("move between adjacent decompositions") {
  const StandardSurface& S = standard_surface({1, 0});
  PantsDecomposition A = make_pants(S.T, {S.alpha[0]});
  PantsDecomposition B = make_pants(S.T, {S.beta[0]});
  PantsDecomposition C = make_pants(S.T, {dehn_twist(S.alpha[0], S.beta[0], 2)});
  std::optional<Move> m = move_between(A, B);
  REQUIRE(m.has_value());
  CHECK(m->kind == MoveKind::S);
  CHECK(apply_move(A, *m).key() == B.key());
  CHECK(!move_between(A, A).has_value());
  // slopes meeting twice are joined by a broadened dual edge, not an S move
  std::optional<Move> dm = move_between(A, C);
  REQUIRE(dm.has_value());
  CHECK(dm->kind == MoveKind::DUAL);
}

TEST_CASE("efficient pairs between consecutive disk sets") {
  SUBCASE("dual genus curves give a single S move pair") {
    MultisectionDiagram d = torus_cp2();
    for (int sector = 0; sector < 3; ++sector) {
      std::vector<EfficientPair> ps = find_efficient_pairs(d, sector, 8);
      REQUIRE(ps.size() == 1);
      CHECK(ps[0].realized_distance == 1);
      REQUIRE(ps[0].witness.size() == 1);
      CHECK(ps[0].witness[0].kind == MoveKind::S);
    }
  }
  SUBCASE("identical sectors pair at distance zero") {
    MultisectionDiagram d = torus_s1xs3();
    std::vector<EfficientPair> ps = find_efficient_pairs(d, 0, 8);
    REQUIRE(ps.size() == 1);
    CHECK(ps[0].realized_distance == 0);
    CHECK(ps[0].witness.empty());
    CHECK(ps[0].left.key() == ps[0].right.key());
  }
}

TEST_CASE("loop certificates") {
  MultisectionDiagram cp2 = torus_cp2();
  const StandardSurface& S = standard_surface({1, 0});
  auto singleton = [&](const MultiCurve& c, int sector) {
    IslandPath p;
    p.sector = sector;
    p.vertices = {make_pants(S.T, {c})};
    return p;
  };
  MultiCurve g = dehn_twist(S.beta[0], S.alpha[0], 1);
  SUBCASE("single vertex islands joined by efficient pairs certify zero") {
    LoopCertificate cert;
    cert.islands = {singleton(S.alpha[0], 0), singleton(S.beta[0], 1), singleton(g, 2)};
    cert.claimed_total = 0;
    CertificateCheck r = verify_certificate(cp2, cert, PantsGraph::DUAL_CURVE, 8);
    CHECK(r.valid);
    CHECK(r.total == 0);
  }
  SUBCASE("claimed total must match") {
    LoopCertificate cert;
    cert.islands = {singleton(S.alpha[0], 0), singleton(S.beta[0], 1), singleton(g, 2)};
    cert.claimed_total = 1;
    CHECK(!verify_certificate(cp2, cert, PantsGraph::DUAL_CURVE, 8).valid);
  }
  SUBCASE("entry vertices must lie in the disk set") {
    LoopCertificate cert;
    cert.islands = {singleton(S.beta[0], 0), singleton(S.beta[0], 1), singleton(g, 2)};
    cert.claimed_total = 0;
    CertificateCheck r = verify_certificate(cp2, cert, PantsGraph::DUAL_CURVE, 8);
    CHECK(!r.valid);
    CHECK(r.reason.find("disk set") != std::string::npos);
  }
  SUBCASE("graph tags must agree") {
    LoopCertificate cert;
    cert.graph = PantsGraph::PANTS;
    cert.islands = {singleton(S.alpha[0], 0), singleton(S.beta[0], 1), singleton(g, 2)};
    CHECK(!verify_certificate(cp2, cert, PantsGraph::DUAL_CURVE, 8).valid);
  }
  SUBCASE("dual edges inside islands count in the dual graph only") {
    IslandPath detour;
    detour.sector = 0;
    detour.vertices = {make_pants(S.T, {S.alpha[0]}),
                       make_pants(S.T, {dehn_twist(S.alpha[0], S.beta[0], 2)}),
                       make_pants(S.T, {S.alpha[0]})};
    LoopCertificate cert;
    cert.islands = {detour, singleton(S.beta[0], 1), singleton(g, 2)};
    cert.claimed_total = 2;
    CertificateCheck r = verify_certificate(cp2, cert, PantsGraph::DUAL_CURVE, 8);
    CHECK(r.valid);
    CHECK(r.total == 2);
    cert.graph = PantsGraph::PANTS;
    CertificateCheck rp = verify_certificate(cp2, cert, PantsGraph::PANTS, 8);
    CHECK(!rp.valid);
    CHECK(rp.reason.find("pants graph") != std::string::npos);
  }
}

TEST_CASE("upper bound search") {
  SUBCASE("efficient loops are found at length zero") {
    for (const MultisectionDiagram& d : {torus_cp2(), torus_s1xs3()}) {
      UpperSearch r = lstar_upper_search(d, 8, 4, PantsGraph::DUAL_CURVE);
      REQUIRE(r.found);
      CHECK(r.cert.claimed_total == 0);
      CHECK(verify_certificate(d, r.cert, PantsGraph::DUAL_CURVE, 8).valid);
    }
  }
  SUBCASE("nothing is found below the curve weights") {
    MultisectionDiagram d = torus_cp2();
    CHECK(!lstar_upper_search(d, 1, 6, PantsGraph::DUAL_CURVE).found);
    CHECK_THROWS_AS(find_efficient_pairs(d, 0, 1), std::runtime_error);
  }
}

TEST_CASE("small invariant detector") {
  const StandardSurface& S = standard_surface({2, 0});
  MultiCurve g0 = dehn_twist(S.beta[0], S.alpha[0], 1);
  MultiCurve g1 = dehn_twist(S.beta[1], S.alpha[1], 1);
  std::vector<TangleData> sectors = {closed_sector(S.T, {S.alpha[0], S.alpha[1]}),
                                     closed_sector(S.T, {S.beta[0], S.beta[1]}),
                                     closed_sector(S.T, {g0, g1})};
  SUBCASE("decomposable diagrams give no bound") {
    CHECK(small_lstar_detector(torus_cp2(), 8).bound == 0);
    auto summand = std::make_shared<const MultisectionDiagram>(torus_cp2());
    Provenance prov{ReducingKind::CompressSeparating, S.delta[0], {summand, summand}};
    MultisectionDiagram sum = make_multisection(S.T, sectors, {prov});
    CHECK(small_lstar_detector(sum, 8).bound == 0);
  }
  SUBCASE("a stuck reduction certifies at least two") {
    MultisectionDiagram bare = make_multisection(S.T, sectors);
    SmallLstarReport r = small_lstar_detector(bare, 8);
    CHECK(r.bound == 2);
  }
}

TEST_CASE("common curve obstruction") {
  const StandardSurface& S = standard_surface({1, 0});
  PantsDecomposition A = make_pants(S.T, {S.alpha[0]});
  PantsDecomposition B = make_pants(S.T, {S.beta[0]});
  CHECK(no_common_curve_check(A, A, A) == CommonCurve::Obstructed);
  CHECK(no_common_curve_check(A, A, B) == CommonCurve::Clean);
  CHECK(no_common_curve_check(A, B, A) == CommonCurve::Clean);
}

TEST_CASE("arc types in the one holed torus frame") {
  const StandardSurface& S = standard_surface({1, 0});
  const Triangulation& T = S.T;
  Arc l = edge_arc(T, 0);
  Arc m = edge_arc(T, 1);
  REQUIRE(geometric_intersection(torus_slope(T, 1, 0), l) == 0);
  REQUIRE(geometric_intersection(torus_slope(T, 0, 1), m) == 0);
  SUBCASE("the l arc survives any frame twist") {
    ArcType t = arc_type_classify(T, l, 3);
    CHECK(t.i == 1);
    CHECK(t.j == 1);
    CHECK(t.slope == "l");
  }
  SUBCASE("the m arc is the only (1,0) arc and only for one twist") {
    ArcType t1 = arc_type_classify(T, m, 1);
    CHECK(t1.i == 1);
    CHECK(t1.j == 0);
    CHECK(t1.slope == "m");
    ArcType t2 = arc_type_classify(T, m, 2);
    CHECK(t2.i == 2);  // no (1,0) arc once the twisting exceeds one
  }
  SUBCASE("degenerate frames are rejected") {
    CHECK_THROWS_AS(arc_type_classify(T, l, 0), std::invalid_argument);
    const StandardSurface& S2 = standard_surface({2, 0});
    CHECK_THROWS_AS(arc_type_classify(S2.T, l, 1), std::invalid_argument);
  }
}

TEST_CASE("genus two frame and dual curve families") {
  const StandardSurface& S = standard_surface({2, 0});
  SUBCASE("the standard frame validates") {
    for (int n : {1, 2, 3}) {
      Genus2Frame fr = standard_genus2_frame(n);
      CHECK(geometric_intersection(fr.fp, fr.fpp) == n);
      CHECK(geometric_intersection(fr.f, fr.fp) == 1);
    }
    CHECK_THROWS_AS(standard_genus2_frame(0), std::invalid_argument);
  }
  SUBCASE("broken frames are rejected") {
    Genus2Frame fr = standard_genus2_frame(1);
    fr.psi2 = S.alpha[0];  // not separating
    CHECK_THROWS_AS(make_genus2_frame(fr), std::invalid_argument);
  }
  SUBCASE("curves dual to the twisted pair fall in the three families") {
    Genus2Frame fr = standard_genus2_frame(1);
    CHECK(classify_dual_curve(fr.f, fr).type == DualCurveType::Type0);
    int duals = 0;
    for (const MultiCurve& z : enumerate_curves(S.T, 10)) {
      if (geometric_intersection(z, fr.fp) != 1) continue;
      if (geometric_intersection(z, fr.fpp) != 1) continue;
      ++duals;
      DualCurveClass c = classify_dual_curve(z, fr);  // must not throw
      CHECK(c.gamma2_crossings <= 4);
      if (c.type == DualCurveType::Type4) CHECK(c.r >= 1);
    }
    CHECK(duals > 0);
    CHECK_THROWS_AS(classify_dual_curve(fr.gamma2, fr), std::invalid_argument);
  }
}

TEST_CASE("frame extraction fails gracefully off pattern") {
  FrameExtraction t = extract_genus2_frame(torus_cp2(), 8);
  CHECK(!t.classified);
  CHECK(t.note.find("UNCLASSIFIED") == 0);
  const StandardSurface& S = standard_surface({2, 0});
  TangleData h = closed_sector(S.T, {S.alpha[0], S.alpha[1]});
  MultisectionDiagram stable = make_multisection(S.T, {h, h, h, h});
  FrameExtraction r = extract_genus2_frame(stable, 8);  // k = 2 everywhere
  CHECK(!r.classified);
  CHECK(r.note.find("(2,1)") != std::string::npos);
}
