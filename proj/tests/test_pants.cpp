#include <doctest.h>

#include "multisec/pants.hpp"
#include "multisec/surface.hpp"

using namespace multisec;

TEST_CASE("pants validation") {
  SUBCASE("three pair curves on the six-punctured sphere") {
    const StandardSurface& S = standard_surface({0, 6});
    PantsDecomposition P = make_pants(S.T, {S.rho[0], S.rho[1], S.rho[2]});
    CHECK(P.curves.size() == 3);
    for (const CutComponent& k : P.support_map) {
      CHECK(k.genus == 0);
      CHECK(k.punctures + k.boundaries == 4);
    }
  }
  SUBCASE("nested curves on the six-punctured sphere") {
    const StandardSurface& S = standard_surface({0, 6});
    PantsDecomposition P = make_pants(S.T, {S.rho[0], S.omega[1], S.rho[1]});
    CHECK(P.curves.size() == 3);
  }
  SUBCASE("single curve on the four-punctured sphere") {
    const StandardSurface& S = standard_surface({0, 4});
    PantsDecomposition P = make_pants(S.T, {S.rho[0]});
    CHECK(P.curves.size() == 1);
    CHECK(SurfaceSignature{0, 4}.pants_count() == 1);
  }
  SUBCASE("wrong count rejected") {
    const StandardSurface& S = standard_surface({2, 0});
    PantsDecomposition P;
    P.T = &S.T;
    P.curves = {S.alpha[0], S.alpha[1]};
    PantsCheck ck = validate(P);
    CHECK(!ck.ok);
    CHECK(ck.reason == "wrong count");
    CHECK_THROWS_AS(make_pants(S.T, {S.alpha[0], S.alpha[1]}), std::invalid_argument);
  }
  SUBCASE("torus vertices are single curves") {
    const StandardSurface& S = standard_surface({1, 0});
    PantsDecomposition P = make_pants(S.T, {S.alpha[0]});
    CHECK(P.curves.size() == 1);
    REQUIRE(P.support_map.size() == 1);
    CHECK(P.support_map[0].genus == 1);
  }
  SUBCASE("genus 2 standard decomposition") {
    const StandardSurface& S = standard_surface({2, 0});
    PantsDecomposition P = make_pants(S.T, {S.alpha[0], S.alpha[1], S.delta[0]});
    int tori = 0;
    for (const CutComponent& k : P.support_map)
      if (k.genus == 1 && k.boundaries == 1) ++tori;
    CHECK(tori == 2);  // the alpha curves sit in one-holed tori
  }
}

TEST_CASE("pants moves") {
  SUBCASE("S-move swaps a handle curve for its dual") {
    const StandardSurface& S = standard_surface({1, 2});
    PantsDecomposition P = make_pants(S.T, {S.alpha[0], S.rho[0]});
    int i = -1;
    for (int k = 0; k < 2; ++k)
      if (P.curves[k].weights() == S.alpha[0].weights()) i = k;
    REQUIRE(i >= 0);
    PantsDecomposition Q = apply_move(P, {MoveKind::S, i, S.beta[0]});
    CHECK(Q.key() != P.key());
    CHECK(validate(Q).ok);
  }
  SUBCASE("A-move and its inverse") {
    const StandardSurface& S = standard_surface({0, 4});
    MultiCurve mid = boundary_of_edge_tree(S.T, S.chain_segments[1]);
    PantsDecomposition P = make_pants(S.T, {S.rho[0]});
    REQUIRE(geometric_intersection(S.rho[0], mid) == 2);
    REQUIRE(algebraic_intersection(S.rho[0], mid) == 0);
    PantsDecomposition Q = apply_move(P, {MoveKind::A, 0, mid});
    PantsDecomposition back = apply_move(Q, {MoveKind::A, 0, S.rho[0]});
    CHECK(back.key() == P.key());
  }
  SUBCASE("replacement hitting a retained curve is rejected") {
    const StandardSurface& S = standard_surface({2, 0});
    PantsDecomposition P = make_pants(S.T, {S.alpha[0], S.alpha[1], S.delta[0]});
    int i = -1;
    for (int k = 0; k < 3; ++k)
      if (P.curves[k].weights() == S.alpha[0].weights()) i = k;
    REQUIRE(i >= 0);
    // beta_1 meets alpha_1, which stays in the decomposition
    CHECK_THROWS_AS(apply_move(P, {MoveKind::DUAL, i, S.beta[1]}), std::invalid_argument);
  }
}

TEST_CASE("pants neighbors") {
  SUBCASE("four-punctured sphere partners are all A-moves") {
    const StandardSurface& S = standard_surface({0, 4});
    PantsDecomposition P = make_pants(S.T, {S.rho[0]});
    auto moves = neighbor_moves(P, PantsGraph::PANTS, 8);
    CHECK(!moves.empty());
    for (const Move& m : moves) {
      CHECK(m.kind == MoveKind::A);
      CHECK(geometric_intersection_cached(P.curves[0], m.replacement) == 2);
      CHECK(algebraic_intersection(P.curves[0], m.replacement) == 0);
    }
    // the dual graph adds vertices not adjacent in the pants graph
    auto dual = neighbor_moves(P, PantsGraph::DUAL_CURVE, 8);
    CHECK(dual.size() >= moves.size());
  }
  SUBCASE("one-holed torus partners are all S-moves") {
    const StandardSurface& S = standard_surface({1, 2});
    PantsDecomposition P = make_pants(S.T, {S.alpha[0], S.rho[0]});
    int i = -1;
    for (int k = 0; k < 2; ++k)
      if (P.curves[k].weights() == S.alpha[0].weights()) i = k;
    auto moves = neighbor_moves(P, PantsGraph::PANTS, 10);
    bool saw_s = false;
    for (const Move& m : moves)
      if (m.replaced == i) {
        CHECK(m.kind == MoveKind::S);
        CHECK(geometric_intersection_cached(P.curves[i], m.replacement) == 1);
        saw_s = true;
      }
    CHECK(saw_s);
  }
  SUBCASE("weight bound below current curves") {
    const StandardSurface& S = standard_surface({0, 4});
    PantsDecomposition P = make_pants(S.T, {S.rho[0]});
    CHECK_THROWS_AS(neighbor_moves(P, PantsGraph::PANTS, 0), std::invalid_argument);
  }
  SUBCASE("neighbor symmetry") {
    const StandardSurface& S = standard_surface({0, 4});
    PantsDecomposition P = make_pants(S.T, {S.rho[0]});
    auto nbs = neighbors(P, PantsGraph::PANTS, 6);
    REQUIRE(!nbs.empty());
    const PantsDecomposition& Q = nbs[0];
    bool back = false;
    for (const PantsDecomposition& R : neighbors(Q, PantsGraph::PANTS, 6))
      if (R.key() == P.key()) back = true;
    CHECK(back);
  }
}

TEST_CASE("pants distance") {
  SUBCASE("identical endpoints") {
    const StandardSurface& S = standard_surface({0, 4});
    PantsDecomposition P = make_pants(S.T, {S.rho[0]});
    auto r = pants_distance(P, P, PantsGraph::PANTS, 6, 4);
    CHECK(r.status == PantsDistance::Status::Exact);
    CHECK(r.d == 0);
    CHECK(r.path.empty());
  }
  SUBCASE("any two dual graph vertices on the four-punctured sphere") {
    const StandardSurface& S = standard_surface({0, 4});
    PantsDecomposition P = make_pants(S.T, {S.rho[0]});
    // the curve around the middle pair of punctures; rho[1] itself is
    // isotopic to rho[0] on a four-punctured sphere
    PantsDecomposition Q = make_pants(S.T, {boundary_of_edge_tree(S.T, S.chain_segments[1])});
    auto r = pants_distance(P, Q, PantsGraph::DUAL_CURVE, 8, 4);
    CHECK(r.status == PantsDistance::Status::Exact);
    CHECK(r.d == 1);
    REQUIRE(r.path.size() == 1);
    // replay
    PantsDecomposition cur = P;
    for (const Move& m : r.path) cur = apply_move(cur, m);
    CHECK(cur.key() == Q.key());
  }
  SUBCASE("dual torus slopes are one S-move apart") {
    const StandardSurface& S = standard_surface({1, 0});
    PantsDecomposition P = make_pants(S.T, {S.alpha[0]});
    PantsDecomposition Q = make_pants(S.T, {S.beta[0]});
    auto r = pants_distance(P, Q, PantsGraph::PANTS, 8, 4);
    CHECK(r.status == PantsDistance::Status::Exact);
    CHECK(r.d == 1);
    REQUIRE(r.path.size() == 1);
    CHECK(r.path[0].kind == MoveKind::S);
  }
  SUBCASE("genus 2 splitting endpoints are distance 2") {
    const StandardSurface& S = standard_surface({2, 0});
    PantsDecomposition P = make_pants(S.T, {S.alpha[0], S.alpha[1], S.delta[0]});
    PantsDecomposition Q = make_pants(S.T, {S.beta[0], S.beta[1], S.delta[0]});
    int wb = 0;
    for (const MultiCurve& c : Q.curves) wb = std::max(wb, c.total_weight());
    for (const MultiCurve& c : P.curves) wb = std::max(wb, c.total_weight());
    auto r = pants_distance(P, Q, PantsGraph::DUAL_CURVE, wb, 4);
    CHECK(r.d == 2);
    CHECK(r.status == PantsDistance::Status::Exact);
    PantsDecomposition cur = P;
    for (const Move& m : r.path) cur = apply_move(cur, m);
    CHECK(cur.key() == Q.key());
    // the pants graph can do no better: its edges are dual graph edges
    auto rp = pants_distance(P, Q, PantsGraph::PANTS, wb, 4);
    CHECK(rp.d >= r.d);
    CHECK(rp.d == 2);  // two S-moves
  }
}
