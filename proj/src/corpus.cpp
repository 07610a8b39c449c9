#include "multisec/io.hpp"
#include "multisec/surface.hpp"

#include <algorithm>
#include <functional>

// Built-in example diagrams. Entries reconstructed from standard published
// models record that in their provenance field; curves without standard names
// are pinned by intersection profile against the named ones and stored as
// normal coordinates.

namespace multisec {

namespace {

CurveSpec base_spec(std::string name, std::vector<TwistStep> twists = {}) {
  CurveSpec s;
  s.base = std::move(name);
  s.twists = std::move(twists);
  return s;
}

ShadowSpec shadow_base(std::string name, std::vector<TwistStep> twists = {}) {
  ShadowSpec s;
  s.base = std::move(name);
  s.twists = std::move(twists);
  return s;
}

CurveSpec normal_spec(const MultiCurve& c) {
  CurveSpec s;
  s.normal = c.weights();
  return s;
}

// shortest curve matching an intersection profile over the standard curves
MultiCurve profile_curve(const StandardSurface& S,
                         const std::function<bool(const MultiCurve&)>& profile) {
  for (int wb : {8, 10, 12}) {
    std::vector<MultiCurve> cand = enumerate_curves(S.T, wb);
    std::sort(cand.begin(), cand.end());
    for (const MultiCurve& c : cand)
      if (profile(c)) return c;
  }
  throw FileError("corpus: no curve matches the profile");
}

// gamma curves of the standard product trisection on summand handles
// (2j, 2j+1): homologous to alpha_{2j} + beta_{2j+1} and alpha_{2j+1} + beta_{2j}
std::pair<MultiCurve, MultiCurve> product_gammas(const StandardSurface& S, int j) {
  auto clean = [&](const MultiCurve& c, int h1, int h2) {
    for (int h = 0; h < S.sig.genus; ++h) {
      if (geometric_intersection(c, S.alpha[h]) != (h == h2 ? 1 : 0)) return false;
      if (geometric_intersection(c, S.beta[h]) != (h == h1 ? 1 : 0)) return false;
    }
    return true;
  };
  int h1 = 2 * j, h2 = 2 * j + 1;
  MultiCurve g1 =
      profile_curve(S, [&](const MultiCurve& c) { return clean(c, h1, h2); });
  MultiCurve g2 = profile_curve(S, [&](const MultiCurve& c) {
    return clean(c, h2, h1) && geometric_intersection(c, g1) == 0;
  });
  return {g1, g2};
}

DiagramFile genus1_trisection(std::vector<CurveSpec> cuts, std::string provenance) {
  DiagramFile f;
  f.surface = {1, 0};
  f.n = 3;
  const char* names[] = {"c0", "c1", "c2"};
  for (int i = 0; i < 3; ++i) {
    f.curves.emplace_back(names[i], std::move(cuts[i]));
    f.sectors.push_back({{names[i]}, {}});
  }
  f.provenance = std::move(provenance);
  return f;
}

DiagramFile product_sum_trisection(int m) {
  SurfaceSignature sig{2 * m, 0};
  const StandardSurface& S = standard_surface(sig);
  DiagramFile f;
  f.surface = sig;
  f.n = 3;
  SectorSpec s1, s2, s3;
  for (int h = 0; h < 2 * m; ++h) {
    std::string a = "a" + std::to_string(h), b = "b" + std::to_string(h);
    f.curves.emplace_back(a, base_spec("alpha" + std::to_string(h)));
    f.curves.emplace_back(b, base_spec("beta" + std::to_string(h)));
    s1.cut_system.push_back(a);
    s2.cut_system.push_back(b);
  }
  for (int j = 0; j < m; ++j) {
    auto [g1, g2] = product_gammas(S, j);
    std::string n1 = "g" + std::to_string(2 * j), n2 = "g" + std::to_string(2 * j + 1);
    f.curves.emplace_back(n1, normal_spec(g1));
    f.curves.emplace_back(n2, normal_spec(g2));
    s3.cut_system.push_back(n1);
    s3.cut_system.push_back(n2);
  }
  f.sectors = {s1, s2, s3};
  f.provenance =
      "connected sum of standard genus-two product trisections; diagonal curves "
      "pinned by intersection profile";
  return f;
}

DiagramFile bridge_trisection_cp2(bool winding) {
  DiagramFile f;
  f.surface = {1, 2};
  f.n = 3;
  f.curves.emplace_back("a", base_spec("alpha0"));
  f.curves.emplace_back("b", base_spec("beta0"));
  f.curves.emplace_back("g", base_spec("beta0", {{"a", 1}}));
  if (!winding) {
    f.shadows.emplace_back("s", shadow_base("s0"));
    for (const char* c : {"a", "b", "g"}) f.sectors.push_back({{c}, {"s"}});
    f.provenance = "doubly pointed genus-one trisection of a degree-one curve";
  } else {
    f.shadows.emplace_back("s", shadow_base("s0"));
    f.shadows.emplace_back("t", shadow_base("s0", {{"a", 1}}));
    f.sectors = {{{"a"}, {"s"}}, {{"b"}, {"t"}}, {{"g"}, {"t"}}};
    f.provenance =
        "doubly pointed genus-one trisection of a degree-two curve; the winding "
        "shadow realizes the second power";
  }
  return f;
}

DiagramFile s2xpt_quadrisection() {
  DiagramFile f;
  f.surface = {1, 2};
  f.n = 4;
  f.curves.emplace_back("a", base_spec("alpha0"));
  f.curves.emplace_back("b", base_spec("beta0"));
  f.shadows.emplace_back("s", shadow_base("s0"));
  f.sectors = {{{"a"}, {"s"}}, {{"b"}, {"s"}}, {{"a"}, {"s"}}, {{"b"}, {"s"}}};
  f.provenance = "toric quadrisection of the product of two spheres with a factor sphere";
  return f;
}

}  // namespace

std::vector<std::string> corpus_names() {
  return {"s4",      "s1xs3",  "cp2",        "cp2-bar",      "s2xs2",
          "s2xs2-sum-1", "s2xs2-sum-2", "s2xs2-quad", "cp2-c1", "cp2-c2"};
}

DiagramFile corpus_diagram(const std::string& name) {
  if (name == "s4")
    return genus1_trisection({base_spec("alpha0"), base_spec("alpha0"), base_spec("beta0")},
                             "standard unbalanced genus-one trisection of the four-sphere");
  if (name == "s1xs3")
    return genus1_trisection({base_spec("alpha0"), base_spec("alpha0"), base_spec("alpha0")},
                             "standard genus-one trisection");
  if (name == "cp2")
    return genus1_trisection(
        {base_spec("alpha0"), base_spec("beta0"), base_spec("beta0", {{"c0", 1}})},
        "standard genus-one trisection of the projective plane");
  if (name == "cp2-bar")
    return genus1_trisection(
        {base_spec("alpha0"), base_spec("beta0"), base_spec("beta0", {{"c0", -1}})},
        "standard genus-one trisection of the reversed projective plane");
  if (name == "s2xs2" || name == "s2xs2-sum-1") return product_sum_trisection(1);
  if (name == "s2xs2-sum-2") return product_sum_trisection(2);
  if (name == "s2xs2-quad") return s2xpt_quadrisection();
  if (name == "cp2-c1") return bridge_trisection_cp2(false);
  if (name == "cp2-c2") return bridge_trisection_cp2(true);
  throw FileError("unknown corpus diagram '" + name + "'");
}

std::vector<std::string> corpus_certificate_names() { return {"s2xpt-loop"}; }

CertificateFile corpus_certificate(const std::string& name) {
  if (name == "s2xpt-loop") {
    ResolvedDiagram d = resolve_diagram(corpus_diagram("s2xs2-quad"));
    UpperSearch r = lstar_upper_search(d.diagram, 12, 2, PantsGraph::DUAL_CURVE);
    if (!r.found) throw FileError("corpus certificate search failed");
    return certificate_file(r.cert);
  }
  throw FileError("unknown corpus certificate '" + name + "'");
}

}  // namespace multisec
