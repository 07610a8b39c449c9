#pragma once

// Efficient defining pairs between consecutive disk sets, loop certificates
// for the two distance invariants, the closed-form lower bounds, and the
// genus-two quadrisection helpers.

#include "multisec/multisection.hpp"

#include <optional>

namespace multisec {

// d(P,P') = g-k+b-c for an efficient pair of a (g,k;b,c) splitting; throws
// std::invalid_argument unless g >= k >= 0 and b >= c >= 0
int efficient_distance_formula(int g, int k, int b, int c);

struct EfficientPair {
  PantsDecomposition left, right;  // left in D_i, right in D_{i+1}
  int sector = 0;                  // boundary between sectors (i, i+1 mod n)
  int realized_distance = 0;       // always the formula value
  std::vector<Move> witness;       // geodesic in the dual curve graph
};

// pairs of enumerated disk-set vertices joined by a geodesic of length
// exactly the formula value; the witness is checked move by move ((g-k)
// S-moves and (b-c) A-moves, each curve moves at most once, only compressing
// curves move, A-move endpoints bound disks in both handlebodies) and pairs
// whose witness fails are dropped. Throws std::runtime_error when a disk set
// is empty at the bound.
std::vector<EfficientPair> find_efficient_pairs(const MultisectionDiagram& d, int sector,
                                                int weight_bound);

struct IslandPath {
  int sector = 0;
  // entry ... exit: the endpoints lie in the sector's disk set, consecutive
  // vertices are adjacent in the certificate graph, and intermediate
  // vertices may leave the disk set
  std::vector<PantsDecomposition> vertices;
};

struct LoopCertificate {
  PantsGraph graph = PantsGraph::DUAL_CURVE;
  std::vector<IslandPath> islands;  // one per sector, in cyclic order
  int claimed_total = 0;            // sum of the island path lengths
};

struct CertificateCheck {
  bool valid = false;
  int total = -1;  // the certified L on success
  std::string reason;
};

// checks island membership of the path endpoints, adjacency of consecutive
// vertices, efficiency of the boundary pairs (exit of island i with entry of
// island i+1, measured in the dual curve graph), and the claimed total.
// Valid(L) certifies Lstar <= L (dual graph) or the pants version for PANTS.
CertificateCheck verify_certificate(const MultisectionDiagram& d, const LoopCertificate& cert,
                                    PantsGraph graph, int weight_bound, int slide_budget = 0);

struct UpperSearch {
  bool found = false;
  LoopCertificate cert;
};

// searches over efficient boundary pairs per island and shortest
// within-island connections; the returned certificate passes
// verify_certificate with total <= length_budget. A positive slide_budget
// widens each enumerated disk set across slid shadow representatives
UpperSearch lstar_upper_search(const MultisectionDiagram& d, int weight_bound,
                               int length_budget, PantsGraph graph, int slide_budget = 0);

struct LowerBound {
  int value = 0;
  std::string hypothesis;  // the assumption the bound is conditional on
};

// two-branch multisection bound; returns 2 for (g,b) = (2,0) and throws
// std::invalid_argument for the excluded (0,2) and (1,0) complexities
LowerBound lower_bound_multisection(const MultisectionDiagram& d);

// trisection bound 6g+3b+sum(k)+sum(c)-9, cross-checked against its Euler
// characteristic form; throws std::invalid_argument unless n = 3
LowerBound lower_bound_trisection(const MultisectionDiagram& d);

struct SmallLstarReport {
  int bound = 0;  // 0 when no bound is emitted, else 2 or 3
  std::string reason;
};

// contrapositive detector: a diagram that is not completely decomposable at
// the bound has invariant at least 2; if some c-irreducible piece moreover
// falls outside the small-complexity menu {(0,1),(0,2),(0,3),(1,0),(1,1),
// (2,0)}, at least 3
SmallLstarReport small_lstar_detector(const MultisectionDiagram& d, int weight_bound,
                                      int slide_budget = 0);

enum class CommonCurve { Clean, Obstructed };

// Obstructed when some curve lies in P, P', and Q simultaneously: for a
// trisection this forces a c-reducing curve
CommonCurve no_common_curve_check(const PantsDecomposition& P, const PantsDecomposition& Pp,
                                  const PantsDecomposition& Q);

struct ArcType {
  int i = 0, j = 0;   // crossings with x = n l + m and y = m
  std::string slope;  // "l", "m", "l+nm", "l+(2/n)m" when the type has a finite list
};

// the one-holed torus is modelled as the canonical once-punctured torus; the
// frame is l = (1,0), m = (0,1), x = n l + m, y = m with n != 0
ArcType arc_type_classify(const Triangulation& T, const Arc& a, int n);

struct Genus2Frame {
  const Triangulation* T = nullptr;
  MultiCurve f, fp, fpp;      // f' and f'' are dual to f; i(f',f'') = n
  MultiCurve g, gpp;          // dual pair on the other side, i(g,g'') = 1
  MultiCurve psi1, psi2;      // psi2 separating; {g,psi1,psi2} a decomposition
  MultiCurve gamma1, gamma2;  // gamma2 separating; {f,gamma1,gamma2} likewise
  int n = 0;
};

// validates the frame invariants; throws std::invalid_argument
Genus2Frame make_genus2_frame(Genus2Frame fr);

// the frame on the standard genus two surface with f' = f'' twisted n times
// about f; requires n >= 1
Genus2Frame standard_genus2_frame(int n);

enum class DualCurveType { Type0, Type2, Type4 };

struct DualCurveClass {
  DualCurveType type = DualCurveType::Type0;
  int gamma2_crossings = 0;
  int r = 0;  // Type4: |z cap gamma1| = |z . gamma1| = 2r
};

// classifies a curve dual to both f' and f'' by its gamma2 crossing count;
// throws std::invalid_argument when z is not dual to the pair and
// std::logic_error when the crossing count escapes {0,2,4} or the Type4
// gamma1 condition fails
DualCurveClass classify_dual_curve(const MultiCurve& z, const Genus2Frame& fr);

struct FrameExtraction {
  bool classified = false;  // UNCLASSIFIED when false
  Genus2Frame frame;
  std::string note;
};

// pattern search over the efficient pairs of a (2,1)-quadrisection
FrameExtraction extract_genus2_frame(const MultisectionDiagram& d, int weight_bound);

// true iff |det| = 1, i.e. the splitting has trivial first homology; throws
// std::invalid_argument unless the matrix is 2x2
bool h1_vanishing_check(const std::vector<std::vector<long long>>& m);

}  // namespace multisec
