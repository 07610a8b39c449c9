#include <doctest.h>

#include <algorithm>

#include "multisec/surface.hpp"

using namespace multisec;

TEST_CASE("canonical triangulations are valid") {
  for (int g = 0; g <= 3; ++g)
    for (int p = 0; p <= 8; p += 2) {
      CAPTURE(g);
      CAPTURE(p);
      Triangulation T = canonical_triangulation({g, p});
      CHECK(T.euler_cell() == 2 - 2 * g);
      CHECK(T.punctures == p);
      int real = 0;
      for (int v = 0; v < T.num_vertices(); ++v)
        if (T.puncture[v]) ++real;
      CHECK(real == p);
      // vertex stars close up everywhere
      int corners = 0;
      for (int v = 0; v < T.num_vertices(); ++v) corners += (int)T.vertex_star(v).size();
      CHECK(corners == 3 * T.num_tris());
    }
}

TEST_CASE("normal coordinate round trip on the torus") {
  const StandardSurface& S = standard_surface({1, 0});
  const Triangulation& T = S.T;
  REQUIRE(T.num_edges() == 3);
  // all admissible small weight vectors reconstruct to themselves
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c) {
        std::vector<int> w{a, b, c};
        MultiCurve m;
        try {
          m = MultiCurve::from_weights(T, w);
        } catch (const std::invalid_argument&) {
          continue;
        }
        CHECK(m.weights() == w);
        CHECK(MultiCurve::from_embedded(m.embedding()).weights() == w);
      }
}

TEST_CASE("standard curves on genus surfaces") {
  for (int g = 1; g <= 3; ++g) {
    CAPTURE(g);
    const StandardSurface& S = standard_surface({g, 0});
    for (int i = 0; i < g; ++i) {
      CHECK(S.alpha[i].component_count() == 1);
      CHECK(S.beta[i].component_count() == 1);
      CHECK(is_essential(S.alpha[i]));
      CHECK(is_essential(S.beta[i]));
      for (int j = 0; j < g; ++j) {
        CAPTURE(i);
        CAPTURE(j);
        CHECK(geometric_intersection(S.alpha[i], S.alpha[j]) == 0);
        CHECK(geometric_intersection(S.beta[i], S.beta[j]) == 0);
        CHECK(geometric_intersection(S.alpha[i], S.beta[j]) == (i == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("cutting along standard curves") {
  const StandardSurface& S = standard_surface({1, 0});
  auto r = cut_along(S.alpha[0]);
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0].genus == 0);
  CHECK(r.components[0].boundaries == 2);

  const StandardSurface& S2 = standard_surface({2, 0});
  // delta_i = boundary of a neighborhood of alpha_i u beta_i: splits off a
  // one-holed torus
  for (int i = 0; i < 2; ++i) {
    CAPTURE(i);
    REQUIRE(S2.delta[i].component_count() == 1);
    CHECK(geometric_intersection(S2.delta[i], S2.alpha[i]) == 0);
    CHECK(geometric_intersection(S2.delta[i], S2.beta[i]) == 0);
    auto rd = cut_along(S2.delta[i]);
    REQUIRE(rd.components.size() == 2);
    for (auto& k : rd.components) {
      CHECK(k.genus == 1);
      CHECK(k.boundaries == 1);
    }
  }
}

TEST_CASE("puncture curves and shadows") {
  const StandardSurface& S = standard_surface({0, 6});
  REQUIRE(S.rho.size() == 3);
  REQUIRE(S.shadows.size() == 3);
  for (int j = 0; j < 3; ++j) {
    CAPTURE(j);
    auto enc = encloses_punctures(S.rho[j]);
    REQUIRE(enc.has_value());
    CHECK(*enc == std::vector<int>({S.puncture_order[2 * j],
                                    S.puncture_order[2 * j + 1]}));
    CHECK(geometric_intersection(S.rho[j], S.shadows[j]) == 0);
    for (int k = 0; k < 3; ++k)
      if (k != j) {
        CHECK(geometric_intersection(S.rho[j], S.rho[k]) == 0);
        CHECK(geometric_intersection(S.shadows[j], S.shadows[k]) == 0);
      }
  }
  REQUIRE(S.omega.size() == 2);
  for (int j = 0; j < 2; ++j) {
    CAPTURE(j);
    std::vector<int> first(S.puncture_order.begin(),
                           S.puncture_order.begin() + 2 * (j + 1));
    std::sort(first.begin(), first.end());
    bool found = false;
    for (auto& k : cut_along(S.omega[j]).components)
      if (k.genus == 0 && k.boundaries == 1 && k.puncture_vertices == first) found = true;
    CHECK(found);
  }
}

TEST_CASE("dehn twist basics on the torus") {
  const StandardSurface& S = standard_surface({1, 0});
  const MultiCurve &a = S.alpha[0], &b = S.beta[0];
  MultiCurve tb = dehn_twist(b, a, 1);
  CHECK(geometric_intersection(tb, b) == 1);
  CHECK(geometric_intersection(tb, a) == 1);
  // twist of a along itself is a
  CHECK(dehn_twist(a, a, 3).weights() == a.weights());
  // round trip
  MultiCurve back = dehn_twist(tb, a, -1);
  CHECK(is_isotopic(back, b));
}
