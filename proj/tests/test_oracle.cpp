#include <doctest.h>

#include <numeric>

#include "multisec/surface.hpp"

using namespace multisec;

namespace {

// (p,q) torus curve on the canonical 3-edge torus (edges a, b, diagonal):
// crossing counts |q|, |p|, |p+q|; convention fixed by q >= 0
MultiCurve torus_curve(const Triangulation& T, int p, int q) {
  if (q < 0 || (q == 0 && p < 0)) { p = -p; q = -q; }
  return MultiCurve::from_weights(T, {std::abs(q), std::abs(p), std::abs(p + q)});
}

std::vector<std::pair<int, int>> coprime_pairs(int bound) {
  std::vector<std::pair<int, int>> out;
  for (int p = -bound; p <= bound; ++p)
    for (int q = 0; q <= bound; ++q) {
      if (q == 0 && p != 1) continue;
      if (q > 0 && std::gcd(std::abs(p), q) != 1) continue;
      out.push_back({p, q});
    }
  return out;
}

}  // namespace

TEST_CASE("torus intersection oracle") {
  const Triangulation& T = standard_surface({1, 0}).T;
  auto pairs = coprime_pairs(6);
  std::vector<MultiCurve> cs;
  for (auto [p, q] : pairs) {
    cs.push_back(torus_curve(T, p, q));
    CHECK(cs.back().component_count() == 1);
  }
  for (int i = 0; i < (int)pairs.size(); ++i)
    for (int j = i; j < (int)pairs.size(); ++j) {
      auto [p, q] = pairs[i];
      auto [r, s] = pairs[j];
      CAPTURE(p); CAPTURE(q); CAPTURE(r); CAPTURE(s);
      int want = std::abs(p * s - q * r);
      CHECK(geometric_intersection(cs[i], cs[j]) == want);
      CHECK(std::abs(algebraic_intersection(cs[i], cs[j])) == want);
    }
}

TEST_CASE("dehn twists act correctly on torus curves") {
  const Triangulation& T = standard_surface({1, 0}).T;
  // determine the handedness of dehn_twist once, then require consistency
  int conv = 0;
  auto pairs = coprime_pairs(3);
  for (auto [p, q] : pairs)
    for (auto [r, s] : pairs)
      for (int n = -2; n <= 2; ++n) {
        if (n == 0) continue;
        int k = p * s - q * r;
        if (k == 0) continue;
        CAPTURE(p); CAPTURE(q); CAPTURE(r); CAPTURE(s); CAPTURE(n);
        MultiCurve got = dehn_twist(torus_curve(T, r, s), torus_curve(T, p, q), n);
        MultiCurve plus = torus_curve(T, r + n * k * p, s + n * k * q);
        MultiCurve minus = torus_curve(T, r - n * k * p, s - n * k * q);
        if (conv == 0) conv = is_isotopic(got, plus) ? 1 : -1;
        MultiCurve want = conv == 1 ? plus : minus;
        CHECK(is_isotopic(got, want));
      }
  CHECK(conv != 0);
}

TEST_CASE("twist round trips") {
  const Triangulation& T = standard_surface({1, 0}).T;
  auto pairs = coprime_pairs(3);
  for (auto [p, q] : pairs)
    for (auto [r, s] : pairs)
      for (int n = 1; n <= 3; ++n) {
        CAPTURE(p); CAPTURE(q); CAPTURE(r); CAPTURE(s); CAPTURE(n);
        MultiCurve a = torus_curve(T, p, q), c = torus_curve(T, r, s);
        MultiCurve back = dehn_twist(dehn_twist(c, a, n), a, -n);
        CHECK(is_isotopic(back, c));
      }
}

TEST_CASE("twist inequality on genus 2") {
  const StandardSurface& S = standard_surface({2, 0});
  std::vector<MultiCurve> sample{S.alpha[0], S.beta[0], S.alpha[1],
                                 S.beta[1], S.delta[0]};
  for (const MultiCurve& a : sample)
    for (const MultiCurve& b : sample)
      for (const MultiCurve& c : sample)
        for (int n = 2; n <= 3; ++n) {
          int iab = geometric_intersection_cached(a, b);
          if (iab == 0) continue;
          MultiCurve tb = dehn_twist(b, a, n);
          int lhs = geometric_intersection(tb, c);
          int rhs = n * iab * geometric_intersection_cached(a, c) -
                    geometric_intersection_cached(b, c);
          CHECK(lhs >= rhs);
        }
}
