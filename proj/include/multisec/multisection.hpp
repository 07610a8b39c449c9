#pragma once

// Multisection shadow diagrams: n tangles sharing one bridge surface, derived
// complexities (g, k; b, c), Euler characteristics, c-reducing curve search
// and provenance-based c-reduction.

#include "multisec/tangles.hpp"

#include <memory>
#include <string>

namespace multisec {

enum class ReducingKind { CompressSeparating, CutSeparating, CompressNonsep, CutNonsep };

struct ReducingCurve {
  MultiCurve curve;
  ReducingKind kind;                    // from the first sector + separating status
  std::vector<CDiskKind> sector_kinds;  // per sector, all != None
};

struct MultisectionDiagram;
using DiagramPtr = std::shared_ptr<const MultisectionDiagram>;

// diagrams built by one of the four c-reduction-inverse constructions carry
// their summands, so c_reduce can round-trip exactly
struct Provenance {
  ReducingKind kind;
  MultiCurve curve;                // the construction curve on this surface
  std::vector<DiagramPtr> summands;  // two for separating kinds, one otherwise
};

struct MultisectionDiagram {
  const Triangulation* T = nullptr;
  SurfaceSignature sig;
  int n = 0;
  std::vector<TangleData> sectors;  // cyclic; sector i = (H_i, T_i)
  // derived: k[i] and c[i] belong to the consecutive pair (i-1 mod n, i)
  std::vector<int> k, c;
  std::vector<Provenance> provenance;
};

// validates structure and fills k, c; throws std::invalid_argument
MultisectionDiagram make_multisection(const Triangulation& T, std::vector<TangleData> sectors,
                                      std::vector<Provenance> provenance = {});

// pure complexity arithmetic, shared with the invariants formulas
int chi_x(int n, int g, const std::vector<int>& k);
int chi_f(int n, int b, const std::vector<int>& c);

struct EulerData {
  int chi_x = 0;
  std::optional<int> chi_f;  // absent when F is empty (b = 0)
};
EulerData euler_characteristics(const MultisectionDiagram& d);

enum class Effort { Structural, Homology, Full };
enum class PairStatus { Verified, NecessaryConditionsOnly, Failed };

struct PairReport {
  PairStatus status = PairStatus::NecessaryConditionsOnly;
  std::string note;
};

struct ValidationReport {
  bool ok = true;  // no pair Failed
  std::vector<PairReport> pairs;
};

ValidationReport validate(const MultisectionDiagram& d, Effort effort);

// all weight-bounded curves bounding a c-disk in every sector, plus the two
// sufficient-condition detectors (stabilizing pairs and almost-reducible
// curves perturbed through a puncture); a positive slide_budget also tests
// the curve against slid shadow representatives sector by sector
std::vector<ReducingCurve> find_reducing_curves(const MultisectionDiagram& d, int weight_bound,
                                                int slide_budget = 0);

struct ReduceResult {
  bool ok = false;
  std::string note;
  std::vector<MultisectionDiagram> pieces;
};

// round-trips construction provenance; reducing curves without provenance
// yield ok = false with a note (see decompose_completely's STUCK verdict)
ReduceResult c_reduce(const MultisectionDiagram& d, const ReducingCurve& r);

struct DecompositionTree {
  enum class Verdict { CompletelyDecomposable, Stuck };
  struct Node {
    MultisectionDiagram diagram;
    int parent = -1;
    std::vector<int> children;
    bool standard_leaf = false;  // (g,b) in {(0,1),(0,2),(1,0)}
    std::string note;
  };
  std::vector<Node> nodes;  // nodes[0] is the root
  Verdict verdict = Verdict::Stuck;
  std::vector<int> stuck_leaves;
};

DecompositionTree decompose_completely(const MultisectionDiagram& d, int weight_bound,
                                       int slide_budget = 0);

}  // namespace multisec
