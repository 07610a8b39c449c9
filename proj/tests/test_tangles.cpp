#include <doctest.h>

#include "multisec/surface.hpp"
#include "multisec/tangles.hpp"

using namespace multisec;

namespace {

// standard genus-g handlebody data: alpha curves cut, straight shadows
TangleData standard_tangle(SurfaceSignature sig) {
  const StandardSurface& S = standard_surface(sig);
  return make_tangle(make_cut_system(S.T, S.alpha),
                     make_shadow_system(S.T, S.shadows));
}

}  // namespace

TEST_CASE("cut systems and handlebody words") {
  const StandardSurface& S = standard_surface({2, 0});
  CutSystem C = make_cut_system(S.T, {S.alpha[0], S.alpha[1]});
  SUBCASE("members bound their own disks") {
    CHECK(bounds_disk_in_handlebody(S.alpha[0], C));
    CHECK(bounds_disk_in_handlebody(S.alpha[1], C));
  }
  SUBCASE("a dual curve does not bound") {
    CHECK(!bounds_disk_in_handlebody(S.beta[0], C));
    CHECK(!bounds_disk_in_handlebody(S.beta[1], C));
  }
  SUBCASE("separating neighborhood boundary bounds") {
    // delta_0 is disjoint from both cut curves: empty word
    CHECK(bounds_disk_in_handlebody(S.delta[0], C));
  }
  SUBCASE("bad cut systems rejected") {
    CHECK_THROWS_AS(make_cut_system(S.T, {S.alpha[0]}), std::invalid_argument);
    CHECK_THROWS_AS(make_cut_system(S.T, {S.alpha[0], S.beta[0]}), std::invalid_argument);
    // separating curve cannot be part of a cut system
    CHECK_THROWS_AS(make_cut_system(S.T, {S.alpha[0], S.delta[0]}), std::invalid_argument);
  }
}

TEST_CASE("compressing and cut disks on punctured spheres") {
  const StandardSurface& S = standard_surface({0, 4});
  TangleData t = standard_tangle({0, 4});
  SUBCASE("curve around one strand compresses") {
    CHECK(is_compressing(S.rho[0], t));
    CHECK(c_disk_kind(S.rho[0], t) == CDiskKind::Compressing);
  }
  SUBCASE("curve separating mixed pairs crosses both shadows") {
    MultiCurve mid = boundary_of_edge_tree(S.T, S.chain_segments[1]);
    CHECK(geometric_intersection(mid, t.shadows.arcs[0]) == 1);
    CHECK(geometric_intersection(mid, t.shadows.arcs[1]) == 1);
    CHECK(c_disk_kind(mid, t) == CDiskKind::None);
  }

  const StandardSurface& S6 = standard_surface({0, 6});
  TangleData t6 = standard_tangle({0, 6});
  SUBCASE("curve around three punctures is a cut disk") {
    std::vector<int> tree = S6.chain_segments[0];
    for (int e : S6.chain_segments[1]) tree.push_back(e);
    MultiCurve x = boundary_of_edge_tree(S6.T, tree);
    int once = 0, zero = 0;
    for (const Arc& a : t6.shadows.arcs) {
      int k = geometric_intersection(x, a);
      if (k == 1) ++once;
      if (k == 0) ++zero;
    }
    CHECK(once == 1);
    CHECK(zero == 2);
    CHECK(is_cut(x, t6));
    CHECK(!is_compressing(x, t6));
  }
  SUBCASE("exclusivity over the low weight curves") {
    for (const MultiCurve& c : enumerate_curves(S6.T, 6))
      CHECK(!(is_compressing(c, t6) && is_cut(c, t6)));
  }
}

TEST_CASE("cut disk needs a trivial word") {
  // genus 1, two punctures: beta crosses one shadow pattern but winds the
  // handle, so its word is a single generator
  const StandardSurface& S = standard_surface({1, 2});
  TangleData t = standard_tangle({1, 2});
  CHECK(!bounds_disk_in_handlebody(S.beta[0], t.cut_system));
  CHECK(c_disk_kind(S.beta[0], t) == CDiskKind::None);
  CHECK(is_compressing(S.alpha[0], t));
}

TEST_CASE("disk set membership") {
  SUBCASE("standard two strand tangle") {
    const StandardSurface& S = standard_surface({0, 4});
    TangleData t = standard_tangle({0, 4});
    PantsDecomposition P = make_pants(S.T, {S.rho[0]});
    CHECK(in_disk_set(P, t, 0));
  }
  SUBCASE("dual curve fails membership") {
    const StandardSurface& S = standard_surface({2, 0});
    TangleData t = standard_tangle({2, 0});
    PantsDecomposition P = make_pants(S.T, {S.beta[0], S.alpha[1], S.delta[0]});
    CHECK(!in_disk_set(P, t, 0));
  }
  SUBCASE("one slide recovers a slid shadow system") {
    const StandardSurface& S = standard_surface({1, 2});
    TangleData t = standard_tangle({1, 2});
    PantsDecomposition P =
        make_pants(S.T, {S.alpha[0], boundary_of_neighborhood(S.T, {}, {S.shadows[0]})});
    REQUIRE(in_disk_set(P, t, 0));
    // slide the shadow over a disk-bounding curve that crosses it
    MultiCurve slider;
    for (const MultiCurve& c : enumerate_curves(S.T, 8)) {
      if (!bounds_disk_in_handlebody(c, t.cut_system)) continue;
      if (geometric_intersection(c, S.shadows[0]) >= 1) {
        slider = c;
        break;
      }
    }
    REQUIRE(!slider.empty());
    ShadowSystem slid;
    slid.T = &S.T;
    slid.arcs = {dehn_twist(S.shadows[0], slider, 1)};
    TangleData t2 = make_tangle(t.cut_system, slid);
    CHECK(!in_disk_set(P, t2, 0));
    CHECK(in_disk_set(P, t2, 1, slider.total_weight()));
  }
}

TEST_CASE("disk set enumeration") {
  SUBCASE("two strand tangle has a singleton disk set") {
    TangleData t = standard_tangle({0, 4});
    auto verts = enumerate_disk_set(t, 8);
    CHECK(verts.size() == 1);
  }
  SUBCASE("genus one handlebody has a singleton disk set") {
    // closed torus, no strands: the meridian is the only curve bounding
    TangleData t = standard_tangle({1, 0});
    auto verts = enumerate_disk_set(t, 10);
    REQUIRE(verts.size() == 1);
    CHECK(is_isotopic(verts[0].curves[0], t.cut_system.curves[0]));
  }
  SUBCASE("one bridge torus tangle") {
    const StandardSurface& S = standard_surface({1, 2});
    TangleData t = standard_tangle({1, 2});
    // at weight 10 the meridian pairs with two cut-disk partners and with
    // the separating band sum of two meridian disks
    auto verts = enumerate_disk_set(t, 10);
    CHECK(verts.size() == 3);
    for (const PantsDecomposition& P : verts) {
      bool has_alpha = false;
      for (const MultiCurve& c : P.curves) {
        CHECK(c_disk_kind(c, t) != CDiskKind::None);
        if (is_isotopic(c, S.alpha[0])) has_alpha = true;
      }
      CHECK(has_alpha);
    }
  }
  SUBCASE("bound below the diagram weight is empty") {
    TangleData t = standard_tangle({1, 2});
    CHECK(enumerate_disk_set(t, 1).empty());
  }
}
