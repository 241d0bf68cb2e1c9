#pragma once

// Planar chart diagrams for factorization systems.
//
// A chart is a labeled, oriented planar graph stored as a rotation system:
// each vertex lists the counterclockwise cyclic order of its incident edge
// ends.  Every vertex kind fixes a template for that cyclic (label,
// direction) sequence, and validation matches templates up to rotation and
// mirror image, cross-checks the rotation system against the declared edge
// endpoints, and traces faces to confirm that every connected component
// embeds in the plane.  Closed edges without vertices (hoops) are allowed
// and carry no constraint beyond a valid label.
//
// Charts interoperate with move certificates through a "movie" compiler:
// system entries become strands flowing outward level by level, and each
// rewriting move contributes the interior vertex that realizes it, so a
// verified certificate turns into a planar diagram whose black vertices
// spell the endpoint words.

#include <optional>
#include <string>
#include <vector>

#include "hlf/hurwitz.hpp"
#include "hlf/stabilizer.hpp"
#include "hlf/word.hpp"

namespace hlf {

// One end of an edge: end 0 is the tail (the edge points away from the
// vertex holding this end), end 1 is the head (the edge points at it).
struct EdgeEnd {
  int edge = 0;
  int end = 0;

  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

enum class VertexKind {
  Black,          // degree 1: a singular fiber
  Crossing,       // degree 4: two distant chain twists passing through
  Braiding,       // degree 6: an adjacent braid triple
  NucleonOut,     // degree 4(2g+1), all edges outward
  NucleonIn,      // degree 4(2g+1), all edges inward
  BigNucleonOut,  // degree 2(g+1)(2g+1), all edges outward
  BigNucleonIn,   // degree 2(g+1)(2g+1), all edges inward
  Transition,     // degree 2(4g+3): a chain twist passing the full block
  SigmaBurstOut,  // degree 4h(2h+1)+1: sigma_h traded for its chain word
  SigmaBurstIn    // degree 4h(2h+1)+1, mirror orientation
};

struct ChartVertex {
  int id = 0;
  VertexKind kind = VertexKind::Black;
  std::vector<EdgeEnd> rotation;  // counterclockwise around the vertex

  friend bool operator==(const ChartVertex&, const ChartVertex&) = default;
};

struct ChartEdge {
  int id = 0;
  Letter label;
  // Ids of the vertices holding the tail and the head; both absent for a
  // hoop ("closed edges without vertices").
  std::optional<int> from;
  std::optional<int> to;

  friend bool operator==(const ChartEdge&, const ChartEdge&) = default;
};

struct Chart {
  int g = 1;
  std::vector<ChartVertex> vertices;
  std::vector<ChartEdge> edges;

  Genus genus() const { return Genus(g); }
  friend bool operator==(const Chart&, const Chart&) = default;
};

// Validation outcome.  `problems` lists every violation found (empty exactly
// when `ok`); `notes` records the conditions that hold vacuously because the
// model stores abstract planar maps rather than embedded graphs.
struct ChartReport {
  bool ok = false;
  std::vector<std::string> problems;
  std::vector<std::string> notes;
};

ChartReport validate_chart(const Chart& chart);

// Tally the black vertices by adjacent label and direction.  A black vertex
// counts as positive exactly when its edge points at it.
FiberCounts chart_census(const Chart& chart);

// Disjoint union with the second chart's ids shifted past the first's.
// Throws std::invalid_argument on genus mismatch.
Chart chart_product(const Chart& a, const Chart& b);

// Standard one-vertex charts and free edges.
Chart build_n0(const Genus& genus);          // nucleon with 4(2g+1) black caps
Chart build_n1(const Genus& genus);          // big nucleon, 2(g+1)(2g+1) caps
Chart build_f1(const Genus& genus);          // free edge labeled z1
Chart build_f2h(const Genus& genus, int h);  // free edge labeled sigma_h

// How the compiled movie terminates the start word.  BlackBoth caps every
// start entry with a black vertex (negative side) and every end entry with
// a black vertex (positive side).  NucleonsAtStart instead requires the
// start word to be a sequence of repeats of the type I word and plants one
// nucleon per repeat, so only the end word contributes black vertices.
enum class StartCapping { BlackBoth, NucleonsAtStart };

// Compile a verified certificate into a chart.  Requires every entry along
// the replay to be plain (trivial conjugator, positive sign) and the move
// list to avoid the slide moves; cyclic moves rotate the reading frame
// without adding a vertex.  Throws std::invalid_argument when the
// certificate fails to verify or a precondition is violated.
Chart compile_certificate(const MoveCertificate& cert, StartCapping capping);

// The one-vertex model of the type II_h fiber: the derivation movie from
// (h+1) nucleons with its chain block contracted into a sigma burst whose
// sigma edge is capped by a black vertex.
Chart build_n2h(const Genus& genus, int h,
                long long budget = kDefaultRewriteBudget);

// ---------------------------------------------------------------------------
// Local moves.
//
// The three forward moves delete an interior vertex through an adjacent
// black vertex: the capped edge and the vertex disappear, the edge opposite
// the cap is re-anchored to the black vertex, and the remaining edge ends
// fuse in nested pairs around the removed cap.  The inverses re-create the
// vertex next to a black vertex, cutting existing edges to thread them
// through it.  Both directions preserve the census and validity.

enum class ChartMoveKind { C2, C3, C4, C2inv, C3inv, C4inv };

// Reconstruction data for one nested fusion pair: `keep.edge` is the fused
// edge, `keep.end` the parity of the end the inverse re-anchors on the near
// side of the new vertex, and `restored_edge` the id the far piece takes.
struct ChartThread {
  EdgeEnd keep;
  int restored_edge = 0;

  friend bool operator==(const ChartThread&, const ChartThread&) = default;
};

// A move site.  Forward moves read only `edge` (the black-capped edge).
// Inverse moves also use the remaining fields, which a forward application
// fills in so that replaying the returned site undoes it exactly.
struct ChartSite {
  int edge = 0;       // black-adjacent edge of the move
  int new_vertex = 0;  // id for the re-created interior vertex
  int new_edge = 0;    // id for the re-created capped edge
  Letter cap_label;    // label of the re-created capped edge
  int phase = 0;       // rotation index of the capped end at the vertex
  int black = -1;      // black vertex of the cap; -1 lets an inverse deduce it
  std::vector<ChartThread> threads;

  friend bool operator==(const ChartSite&, const ChartSite&) = default;
};

struct LocalMoveResult {
  Chart chart;
  ChartSite reverse_site;  // applying the opposite kind here undoes the move
};

/// Apply one local move.  Throws std::invalid_argument when the site does
// not match the move's pattern (including the braid-vertex rule that the
// capped edge may not be the middle of an orientation run) or when the
// surgery would leave the chart invalid.
LocalMoveResult local_move(const Chart& chart, ChartMoveKind kind,
                           const ChartSite& site);

// Graphviz rendering: vertex shapes by kind, arrowheads by orientation.
std::string to_dot(const Chart& chart);

std::string to_string(VertexKind kind);
std::string to_string(ChartMoveKind kind);

}  // namespace hlf
