#include <doctest.h>

#include "multisec/multisection.hpp"
#include "multisec/surface.hpp"

using namespace multisec;

namespace {

TangleData closed_sector(const Triangulation& T, std::vector<MultiCurve> cs) {
  return make_tangle(make_cut_system(T, std::move(cs)), make_shadow_system(T, {}));
}

// arc parallel to a triangulation edge joining two punctures
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

}  // namespace

TEST_CASE("derived multisection complexities") {
  SUBCASE("genus one trisection of the projective plane") {
    MultisectionDiagram d = torus_cp2();
    CHECK(d.k == std::vector<int>{0, 0, 0});
    EulerData e = euler_characteristics(d);
    CHECK(e.chi_x == 3);
    CHECK(!e.chi_f.has_value());
  }
  SUBCASE("identical cut systems give the S1xS3 summand") {
    const StandardSurface& S = standard_surface({1, 0});
    MultisectionDiagram d = make_multisection(S.T, {closed_sector(S.T, {S.alpha[0]}),
                                                    closed_sector(S.T, {S.alpha[0]}),
                                                    closed_sector(S.T, {S.alpha[0]})});
    CHECK(d.k == std::vector<int>{1, 1, 1});
    CHECK(euler_characteristics(d).chi_x == 0);
  }
  SUBCASE("two sectors rejected") {
    const StandardSurface& S = standard_surface({1, 0});
    std::vector<TangleData> two = {closed_sector(S.T, {S.alpha[0]}),
                                   closed_sector(S.T, {S.beta[0]})};
    CHECK_THROWS_AS(make_multisection(S.T, std::move(two)), std::invalid_argument);
  }
}

TEST_CASE("multisection validation") {
  SUBCASE("projective plane diagram verifies fully") {
    MultisectionDiagram d = torus_cp2();
    ValidationReport r = validate(d, Effort::Full);
    CHECK(r.ok);
    for (const PairReport& p : r.pairs) CHECK(p.status == PairStatus::Verified);
  }
  SUBCASE("stable diagram verifies without destabilization") {
    const StandardSurface& S = standard_surface({1, 0});
    MultisectionDiagram d = make_multisection(S.T, {closed_sector(S.T, {S.alpha[0]}),
                                                    closed_sector(S.T, {S.alpha[0]}),
                                                    closed_sector(S.T, {S.alpha[0]})});
    ValidationReport r = validate(d, Effort::Full);
    CHECK(r.ok);
    for (const PairReport& p : r.pairs) CHECK(p.status == PairStatus::Verified);
  }
  SUBCASE("torsion in the splitting homology fails") {
    const StandardSurface& S = standard_surface({1, 0});
    // a slope meeting alpha twice: the splitting is a lens space
    MultiCurve c = dehn_twist(S.alpha[0], S.beta[0], 2);
    MultisectionDiagram d = make_multisection(S.T, {closed_sector(S.T, {S.alpha[0]}),
                                                    closed_sector(S.T, {c}),
                                                    closed_sector(S.T, {S.alpha[0]})});
    ValidationReport r = validate(d, Effort::Homology);
    CHECK(!r.ok);
    bool torsion = false;
    for (const PairReport& p : r.pairs)
      if (p.status == PairStatus::Failed) torsion = true;
    CHECK(torsion);
  }
}

TEST_CASE("bridge orbit counts") {
  const StandardSurface& S = standard_surface({0, 4});
  const Triangulation& T = S.T;
  ShadowSystem chain = make_shadow_system(T, {S.shadows[0], S.shadows[1]});
  auto sector = [&](ShadowSystem sh) {
    return make_tangle(make_cut_system(T, {}), std::move(sh));
  };
  SUBCASE("matching pairings give one unlink component per bridge") {
    MultisectionDiagram d =
        make_multisection(T, {sector(chain), sector(chain), sector(chain)});
    CHECK(d.c == std::vector<int>{2, 2, 2});
    EulerData e = euler_characteristics(d);
    CHECK(e.chi_f.has_value());
    CHECK(*e.chi_f == 4);
  }
  SUBCASE("alternating pairings merge the orbits") {
    // edges 1 and 3 join the other consecutive puncture pairs of the chain
    ShadowSystem alt = make_shadow_system(T, {edge_arc(T, 1), edge_arc(T, 3)});
    MultisectionDiagram d = make_multisection(
        T, {sector(chain), sector(alt), sector(chain), sector(alt)});
    CHECK(d.c == std::vector<int>{1, 1, 1, 1});
    CHECK(*euler_characteristics(d).chi_f == 0);
  }
}

TEST_CASE("reducing curves and provenance reduction") {
  const StandardSurface& S = standard_surface({2, 0});
  const Triangulation& T = S.T;
  MultiCurve g0 = dehn_twist(S.beta[0], S.alpha[0], 1);
  MultiCurve g1 = dehn_twist(S.beta[1], S.alpha[1], 1);
  auto summand = std::make_shared<const MultisectionDiagram>(torus_cp2());
  Provenance prov{ReducingKind::CompressSeparating, S.delta[0], {summand, summand}};
  std::vector<TangleData> sectors = {closed_sector(T, {S.alpha[0], S.alpha[1]}),
                                     closed_sector(T, {S.beta[0], S.beta[1]}),
                                     closed_sector(T, {g0, g1})};
  MultisectionDiagram sum = make_multisection(T, sectors, {prov});
  CHECK(sum.k == std::vector<int>{0, 0, 0});
  CHECK(euler_characteristics(sum).chi_x == 4);  // 3 + 3 - 2

  auto rs = find_reducing_curves(sum, 8);
  const ReducingCurve* waist = nullptr;
  for (const ReducingCurve& r : rs)
    if (r.curve.weights() == S.delta[0].weights()) waist = &r;
  REQUIRE(waist != nullptr);
  CHECK(waist->kind == ReducingKind::CompressSeparating);
  for (CDiskKind kd : waist->sector_kinds) CHECK(kd == CDiskKind::Compressing);

  SUBCASE("reduction round-trips the summands") {
    ReduceResult red = c_reduce(sum, *waist);
    REQUIRE(red.ok);
    REQUIRE(red.pieces.size() == 2);
    for (const MultisectionDiagram& p : red.pieces) {
      CHECK(p.sig == SurfaceSignature{1, 0});
      CHECK(euler_characteristics(p).chi_x == 3);
    }
    // chi additivity for a distant sum
    CHECK(euler_characteristics(sum).chi_x ==
          euler_characteristics(red.pieces[0]).chi_x +
              euler_characteristics(red.pieces[1]).chi_x - 2);
  }
  SUBCASE("complete decomposition down to the standard menu") {
    DecompositionTree tree = decompose_completely(sum, 8);
    CHECK(tree.verdict == DecompositionTree::Verdict::CompletelyDecomposable);
    int leaves = 0;
    for (const auto& nd : tree.nodes)
      if (nd.standard_leaf) ++leaves;
    CHECK(leaves == 2);
  }
  SUBCASE("without provenance the reduction is stuck") {
    MultisectionDiagram bare = make_multisection(T, sectors);
    DecompositionTree tree = decompose_completely(bare, 8);
    CHECK(tree.verdict == DecompositionTree::Verdict::Stuck);
    REQUIRE(tree.stuck_leaves.size() == 1);
    CHECK(tree.nodes[tree.stuck_leaves[0]].note ==
          "reducing curves found but none carries provenance");
  }
}
