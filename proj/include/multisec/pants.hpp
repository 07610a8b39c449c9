#pragma once

// Pants decompositions as vertices of the dual curve graph and pants graph,
// with move application, weight-bounded neighbor generation, and bounded
// bidirectional distance search.

#include "multisec/curves.hpp"

#include <optional>

namespace multisec {

enum class MoveKind { A, S, DUAL };
enum class PantsGraph { DUAL_CURVE, PANTS };

struct Move {
  MoveKind kind = MoveKind::DUAL;
  int replaced = -1;  // index into the canonical curve order of the source
  MultiCurve replacement;
};

struct PantsDecomposition {
  const Triangulation* T = nullptr;
  // canonically ordered (sorted by normal coordinates); kept sorted by
  // make_pants and apply_move so move indices are reproducible
  std::vector<MultiCurve> curves;
  // support_map[i]: the complexity-one piece curve i lives in once the other
  // curves are cut (four-holed sphere or one-holed torus); set by validate
  std::vector<CutComponent> support_map;
  // optional intersecting partners used to seed twist-word neighbor
  // generation on surfaces too large for exhaustive curve enumeration
  std::vector<MultiCurve> dual_hints;

  // order-insensitive identity key
  std::vector<std::vector<int>> key() const;
};

struct PantsCheck {
  bool ok = true;
  std::string reason;
};

// checks all decomposition invariants and fills support_map on success
PantsCheck validate(PantsDecomposition& P);

// sorts, validates (throws std::invalid_argument on failure)
PantsDecomposition make_pants(const Triangulation& T, std::vector<MultiCurve> curves,
                              std::vector<MultiCurve> dual_hints = {});

// checks the kind constraints of m against P, applies it, re-sorts; throws on
// any violation
PantsDecomposition apply_move(const PantsDecomposition& P, const Move& m);

// the single move turning P into Q when they are adjacent in the dual curve
// graph; nullopt when they differ in more than one curve or the replacement
// violates the move conditions
std::optional<Move> move_between(const PantsDecomposition& P, const PantsDecomposition& Q);

// all moves to decompositions whose replacement curve has total normal weight
// <= weight_bound; requires weight_bound >= max curve weight in P. On
// surfaces with <= 12 edges replacements come from the exhaustive curve
// enumeration; larger surfaces use twist words seeded by dual_hints.
std::vector<Move> neighbor_moves(const PantsDecomposition& P, PantsGraph graph,
                                 int weight_bound);
std::vector<PantsDecomposition> neighbors(const PantsDecomposition& P, PantsGraph graph,
                                          int weight_bound);

struct PantsDistance {
  enum class Status { Exact, UpperBound, NotFoundWithin };
  Status status = Status::NotFoundWithin;
  int d = -1;
  std::vector<Move> path;  // fold with apply_move to go from P to Q
};

PantsDistance pants_distance(const PantsDecomposition& P, const PantsDecomposition& Q,
                             PantsGraph graph, int weight_bound, int radius_bound);

}  // namespace multisec
