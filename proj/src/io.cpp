#include "multisec/io.hpp"
#include "multisec/surface.hpp"

#include <json.hpp>

#include <algorithm>

namespace multisec {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& why) { throw FileError(why); }

json twists_json(const std::vector<TwistStep>& ts) {
  json a = json::array();
  for (const TwistStep& t : ts) a.push_back(json::array({t.about, t.power}));
  return a;
}

std::vector<TwistStep> twists_from(const json& a) {
  if (!a.is_array()) bad("twists must be an array");
  std::vector<TwistStep> out;
  for (const json& e : a) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_number_integer())
      bad("each twist must be [curve-name, power]");
    out.push_back({e[0].get<std::string>(), e[1].get<int>()});
  }
  return out;
}

json curve_spec_json(const CurveSpec& s) {
  json o = json::object();
  if (s.is_normal()) {
    o["normal"] = s.normal;
  } else {
    o["base"] = s.base;
    if (!s.twists.empty()) o["twists"] = twists_json(s.twists);
  }
  return o;
}

CurveSpec curve_spec_from(const json& o) {
  if (!o.is_object()) bad("curve spec must be an object");
  CurveSpec s;
  if (o.contains("normal")) {
    if (o.contains("base") || o.contains("twists")) bad("curve spec mixes normal and base forms");
    for (const json& w : o.at("normal")) {
      if (!w.is_number_integer()) bad("normal coordinates must be integers");
      s.normal.push_back(w.get<int>());
    }
  } else if (o.contains("base")) {
    s.base = o.at("base").get<std::string>();
    if (s.base.empty()) bad("empty base name");
    if (o.contains("twists")) s.twists = twists_from(o.at("twists"));
  } else {
    bad("curve spec needs normal or base");
  }
  return s;
}

json shadow_spec_json(const ShadowSpec& s) {
  json o = json::object();
  if (s.is_corridor()) {
    o["corridor"] = s.corridor;
  } else {
    o["base"] = s.base;
    if (!s.twists.empty()) o["twists"] = twists_json(s.twists);
  }
  return o;
}

ShadowSpec shadow_spec_from(const json& o) {
  if (!o.is_object()) bad("shadow spec must be an object");
  ShadowSpec s;
  if (o.contains("corridor")) {
    if (o.contains("base") || o.contains("twists"))
      bad("shadow spec mixes corridor and base forms");
    for (const json& w : o.at("corridor")) {
      if (!w.is_number_integer()) bad("corridor entries must be integers");
      s.corridor.push_back(w.get<int>());
    }
  } else if (o.contains("base")) {
    s.base = o.at("base").get<std::string>();
    if (s.base.empty()) bad("empty base name");
    if (o.contains("twists")) s.twists = twists_from(o.at("twists"));
  } else {
    bad("shadow spec needs corridor or base");
  }
  return s;
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("not valid JSON");
  return j;
}

// standard name lookup ("alpha0", "beta1", "delta0", "omega0")
const MultiCurve* standard_curve(const StandardSurface& S, const std::string& name) {
  auto pick = [&](const char* prefix,
                  const std::vector<MultiCurve>& v) -> const MultiCurve* {
    size_t n = std::string(prefix).size();
    if (name.rfind(prefix, 0) != 0) return nullptr;
    std::string idx = name.substr(n);
    if (idx.empty() || idx.find_first_not_of("0123456789") != std::string::npos)
      return nullptr;
    size_t i = std::stoul(idx);
    return i < v.size() ? &v[i] : nullptr;
  };
  if (const MultiCurve* c = pick("alpha", S.alpha)) return c;
  if (const MultiCurve* c = pick("beta", S.beta)) return c;
  if (const MultiCurve* c = pick("delta", S.delta)) return c;
  if (const MultiCurve* c = pick("rho", S.rho)) return c;
  if (const MultiCurve* c = pick("omega", S.omega)) return c;
  return nullptr;
}

const Arc* standard_shadow(const StandardSurface& S, const std::string& name) {
  if (name.size() < 2 || name[0] != 's') return nullptr;
  std::string idx = name.substr(1);
  if (idx.find_first_not_of("0123456789") != std::string::npos) return nullptr;
  size_t i = std::stoul(idx);
  return i < S.shadows.size() ? &S.shadows[i] : nullptr;
}

MultiCurve resolve_about(const StandardSurface& S,
                         const std::map<std::string, MultiCurve>& named,
                         const std::string& name) {
  auto it = named.find(name);
  if (it != named.end()) return it->second;
  if (const MultiCurve* c = standard_curve(S, name)) return *c;
  bad("unknown twist curve '" + name + "'");
}

Arc corridor_arc(const Triangulation& T, const std::vector<int>& key) {
  if (key.size() != 4 || key[2] != -1)
    bad("only edge-parallel corridors [v_lo, v_hi, -1, edge] are supported");
  int edge = key[3];
  if (edge < 0 || edge >= T.num_edges()) bad("corridor edge out of range");
  auto [t, s] = T.edges[edge].slot[0];
  Strand a;
  a.closed = false;
  a.corner_tri = t;
  a.corner_start = s;
  a.corner_end = (s + 1) % 3;
  a.v_start = T.tris[t].v[s];
  a.v_end = T.tris[t].v[(s + 1) % 3];
  Arc out = Arc::from_strand(T, a);
  if (out.key() != key) bad("corridor key does not resolve to a canonical arc");
  return out;
}

}  // namespace

DiagramFile parse_diagram(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) bad("diagram file must be a JSON object");
  DiagramFile f;
  try {
    f.surface.genus = j.at("surface").at("genus").get<int>();
    f.surface.punctures = j.at("surface").at("punctures").get<int>();
    f.n = j.at("n").get<int>();
    for (auto& [name, spec] : j.at("curves").items())
      f.curves.emplace_back(name, curve_spec_from(spec));
    for (auto& [name, spec] : j.at("shadows").items())
      f.shadows.emplace_back(name, shadow_spec_from(spec));
    for (const json& sec : j.at("sectors")) {
      SectorSpec s;
      for (const json& nm : sec.at("cut_system")) s.cut_system.push_back(nm.get<std::string>());
      for (const json& nm : sec.at("shadows")) s.shadows.push_back(nm.get<std::string>());
      f.sectors.push_back(std::move(s));
    }
    if (j.contains("provenance")) f.provenance = j.at("provenance").get<std::string>();
  } catch (const json::exception& e) {
    bad(std::string("diagram file: ") + e.what());
  }
  return f;
}

std::string emit_diagram(const DiagramFile& f) {
  json j = json::object();
  j["surface"] = {{"genus", f.surface.genus}, {"punctures", f.surface.punctures}};
  j["n"] = f.n;
  json curves = json::object();
  for (const auto& [name, spec] : f.curves) curves[name] = curve_spec_json(spec);
  j["curves"] = std::move(curves);
  json shadows = json::object();
  for (const auto& [name, spec] : f.shadows) shadows[name] = shadow_spec_json(spec);
  j["shadows"] = std::move(shadows);
  json sectors = json::array();
  for (const SectorSpec& s : f.sectors)
    sectors.push_back({{"cut_system", s.cut_system}, {"shadows", s.shadows}});
  j["sectors"] = std::move(sectors);
  if (!f.provenance.empty()) j["provenance"] = f.provenance;
  return j.dump();
}

ResolvedDiagram resolve_diagram(const DiagramFile& f) {
  const StandardSurface& S = standard_surface(f.surface);
  ResolvedDiagram out;
  out.T = &S.T;
  for (const auto& [name, spec] : f.curves) {
    if (out.curves.count(name)) bad("duplicate curve name '" + name + "'");
    try {
      MultiCurve c;
      if (spec.is_normal()) {
        c = MultiCurve::from_weights(S.T, spec.normal);
      } else {
        const MultiCurve* base = standard_curve(S, spec.base);
        if (!base) bad("unknown standard curve '" + spec.base + "'");
        c = *base;
        for (const TwistStep& t : spec.twists)
          c = dehn_twist(c, resolve_about(S, out.curves, t.about), t.power);
      }
      out.curves.emplace(name, std::move(c));
    } catch (const std::invalid_argument& e) {
      bad("curve '" + name + "': " + e.what());
    }
  }
  for (const auto& [name, spec] : f.shadows) {
    if (out.shadows.count(name)) bad("duplicate shadow name '" + name + "'");
    try {
      Arc a;
      if (spec.is_corridor()) {
        a = corridor_arc(S.T, spec.corridor);
      } else {
        const Arc* base = standard_shadow(S, spec.base);
        if (!base) bad("unknown standard shadow '" + spec.base + "'");
        a = *base;
        for (const TwistStep& t : spec.twists)
          a = dehn_twist(a, resolve_about(S, out.curves, t.about), t.power);
      }
      out.shadows.emplace(name, std::move(a));
    } catch (const std::invalid_argument& e) {
      bad("shadow '" + name + "': " + e.what());
    }
  }
  if ((int)f.sectors.size() != f.n) bad("sector count differs from n");
  std::vector<TangleData> sectors;
  for (const SectorSpec& s : f.sectors) {
    std::vector<MultiCurve> cs;
    for (const std::string& nm : s.cut_system) {
      auto it = out.curves.find(nm);
      if (it == out.curves.end()) bad("sector references unknown curve '" + nm + "'");
      cs.push_back(it->second);
    }
    std::vector<Arc> as;
    for (const std::string& nm : s.shadows) {
      auto it = out.shadows.find(nm);
      if (it == out.shadows.end()) bad("sector references unknown shadow '" + nm + "'");
      as.push_back(it->second);
    }
    try {
      sectors.push_back(make_tangle(make_cut_system(S.T, std::move(cs)),
                                    make_shadow_system(S.T, std::move(as))));
    } catch (const std::invalid_argument& e) {
      bad(std::string("invalid sector: ") + e.what());
    }
  }
  try {
    out.diagram = make_multisection(S.T, std::move(sectors));
  } catch (const std::invalid_argument& e) {
    bad(std::string("invalid multisection: ") + e.what());
  }
  return out;
}

CertificateFile parse_certificate(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) bad("certificate file must be a JSON object");
  CertificateFile f;
  try {
    f.graph = j.at("graph").get<std::string>();
    for (const json& isl : j.at("islands")) {
      CertificateFile::Island island;
      island.sector = isl.at("sector").get<int>();
      for (const json& v : isl.at("vertices")) {
        std::vector<CurveSpec> vertex;
        for (const json& c : v) vertex.push_back(curve_spec_from(c));
        island.vertices.push_back(std::move(vertex));
      }
      f.islands.push_back(std::move(island));
    }
    f.claimed = j.at("claimed").get<int>();
  } catch (const json::exception& e) {
    bad(std::string("certificate file: ") + e.what());
  }
  if (f.graph != "dual" && f.graph != "pants") bad("graph must be 'dual' or 'pants'");
  return f;
}

std::string emit_certificate(const CertificateFile& f) {
  json j = json::object();
  j["graph"] = f.graph;
  json islands = json::array();
  for (const CertificateFile::Island& isl : f.islands) {
    json vertices = json::array();
    for (const auto& v : isl.vertices) {
      json vertex = json::array();
      for (const CurveSpec& c : v) vertex.push_back(curve_spec_json(c));
      vertices.push_back(std::move(vertex));
    }
    islands.push_back({{"sector", isl.sector}, {"vertices", std::move(vertices)}});
  }
  j["islands"] = std::move(islands);
  j["claimed"] = f.claimed;
  return j.dump();
}

LoopCertificate resolve_certificate(const CertificateFile& f, const Triangulation& T) {
  SurfaceSignature sig{T.genus, T.punctures};
  const StandardSurface& S = standard_surface(sig);
  if (&S.T != &T) bad("certificate surface is not the canonical triangulation");
  LoopCertificate out;
  out.graph = f.graph == "pants" ? PantsGraph::PANTS : PantsGraph::DUAL_CURVE;
  out.claimed_total = f.claimed;
  std::map<std::string, MultiCurve> no_names;
  for (const CertificateFile::Island& isl : f.islands) {
    IslandPath p;
    p.sector = isl.sector;
    for (const auto& v : isl.vertices) {
      std::vector<MultiCurve> cs;
      for (const CurveSpec& spec : v) {
        try {
          if (spec.is_normal()) {
            cs.push_back(MultiCurve::from_weights(T, spec.normal));
          } else {
            const MultiCurve* base = standard_curve(S, spec.base);
            if (!base) bad("unknown standard curve '" + spec.base + "'");
            MultiCurve c = *base;
            for (const TwistStep& t : spec.twists)
              c = dehn_twist(c, resolve_about(S, no_names, t.about), t.power);
            cs.push_back(std::move(c));
          }
        } catch (const std::invalid_argument& e) {
          bad(std::string("certificate curve: ") + e.what());
        }
      }
      try {
        p.vertices.push_back(make_pants(T, std::move(cs)));
      } catch (const std::invalid_argument& e) {
        bad(std::string("certificate vertex: ") + e.what());
      }
    }
    out.islands.push_back(std::move(p));
  }
  return out;
}

CertificateFile certificate_file(const LoopCertificate& cert) {
  CertificateFile f;
  f.graph = cert.graph == PantsGraph::PANTS ? "pants" : "dual";
  f.claimed = cert.claimed_total;
  for (const IslandPath& p : cert.islands) {
    CertificateFile::Island isl;
    isl.sector = p.sector;
    for (const PantsDecomposition& v : p.vertices) {
      std::vector<CurveSpec> vertex;
      for (const MultiCurve& c : v.curves) {
        CurveSpec s;
        s.normal = c.weights();
        vertex.push_back(std::move(s));
      }
      isl.vertices.push_back(std::move(vertex));
    }
    f.islands.push_back(std::move(isl));
  }
  return f;
}

}  // namespace multisec
