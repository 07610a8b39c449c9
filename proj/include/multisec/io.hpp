#pragma once

// Diagram and certificate file formats (canonical JSON, integers only) and
// the built-in example corpus.

#include "multisec/invariants.hpp"

#include <map>
#include <utility>

namespace multisec {

// malformed or unresolvable input; what() is a short machine-readable phrase
struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TwistStep {
  std::string about;  // a curve name from the same file, or a standard name
  int power = 0;
};

// a curve is given either by normal coordinates against the canonical
// triangulation of the surface, or as a standard named curve with twists
struct CurveSpec {
  std::vector<int> normal;
  std::string base;
  std::vector<TwistStep> twists;
  bool is_normal() const { return base.empty(); }
};

// shadows are edge-parallel corridors [v_lo, v_hi, -1, edge] or standard
// shadow arcs ("s0", "s1", ...) with twists
struct ShadowSpec {
  std::vector<int> corridor;
  std::string base;
  std::vector<TwistStep> twists;
  bool is_corridor() const { return base.empty(); }
};

struct SectorSpec {
  std::vector<std::string> cut_system;
  std::vector<std::string> shadows;
};

struct DiagramFile {
  SurfaceSignature surface;
  int n = 0;
  std::vector<std::pair<std::string, CurveSpec>> curves;    // insertion order kept
  std::vector<std::pair<std::string, ShadowSpec>> shadows;
  std::vector<SectorSpec> sectors;
  std::string provenance;  // reconstruction note for corpus entries, may be empty
};

DiagramFile parse_diagram(const std::string& text);  // throws FileError
std::string emit_diagram(const DiagramFile& f);      // canonical form

struct ResolvedDiagram {
  const Triangulation* T = nullptr;  // the cached canonical triangulation
  MultisectionDiagram diagram;
  std::map<std::string, MultiCurve> curves;
  std::map<std::string, Arc> shadows;
};

ResolvedDiagram resolve_diagram(const DiagramFile& f);  // throws FileError

struct CertificateFile {
  std::string graph;  // "dual" or "pants"
  struct Island {
    int sector = 0;
    std::vector<std::vector<CurveSpec>> vertices;
  };
  std::vector<Island> islands;
  int claimed = 0;
};

CertificateFile parse_certificate(const std::string& text);
std::string emit_certificate(const CertificateFile& f);
LoopCertificate resolve_certificate(const CertificateFile& f, const Triangulation& T);
CertificateFile certificate_file(const LoopCertificate& cert);  // normal coordinates

// --- corpus ---

std::vector<std::string> corpus_names();         // includes parametric instances
DiagramFile corpus_diagram(const std::string& name);  // throws FileError if unknown

std::vector<std::string> corpus_certificate_names();
CertificateFile corpus_certificate(const std::string& name);

}  // namespace multisec
