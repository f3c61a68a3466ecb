#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lamina/rational.hpp"
#include "lamina/surface.hpp"

namespace lamina {

// ---------------------------------------------------------------------------
// Chart points for the elementary pieces.
// ---------------------------------------------------------------------------

// Trim annulus T_c: weights x_i on the boundary arcs, y on the closed curve.
struct TrimChart {
  int c = 1;
  std::vector<Rational> x;
  Rational y;
};

// Pair of pants: boundary weights. All of R+^3 is admissible.
struct PantsChart {
  Rational y1, y2, y3;
  Rational operator[](int i) const { return i == 0 ? y1 : (i == 1 ? y2 : y3); }
};

// Connector Q: one of the two standard tracks (chart 1 / chart 2) with the
// core weight t and crossing weight y. Chart 1 carries positive twisting.
struct ConnectorChart {
  int chart = 1;
  Rational t, y;
};

// The glued plane model of M(Q): chart k maps to (t - y, +-min(t, y)); the
// two quadrants become the closed upper/lower half planes, the t axes land
// on the positive x axis and the y axes on the negative x axis.
struct PlanePoint {
  Rational u, v;
  friend bool operator==(const PlanePoint& a, const PlanePoint& b) {
    return a.u == b.u && a.v == b.v;
  }
};

PlanePoint connector_plane_point(const ConnectorChart& chart);
ConnectorChart connector_from_plane(const PlanePoint& p);
// Boundary weight induced on either circle of Q, as a PL function of the plane.
Rational connector_boundary_weight(const PlanePoint& p);
Rational connector_core_weight(const PlanePoint& p);  // t as a PL function

// Spiral annulus T_empty: signed spiral coordinate; boundary weight |s|.
struct TEmptyChart {
  Rational s;
};

// Cusped disk D_c: weights on the c boundary arcs; membership only.
struct DiskChart {
  int c = 3;
  std::vector<Rational> x;
};

using ChartPoint = std::variant<PantsChart, ConnectorChart, TrimChart, TEmptyChart, DiskChart>;

// ---------------------------------------------------------------------------
// Membership
// ---------------------------------------------------------------------------

// Defining subsets of the T_c chart that contain a point: the radial cell
// {sum x = y} and the face cells {x_i = 0, sum x >= y}.
struct TrimCell {
  bool radial = false;
  std::vector<int> faces;  // 0-based arc indices i with x_i = 0 and sum >= y
};
std::optional<TrimCell> membership_trim(const TrimChart& chart);

// Pants cell with the internal arc weights. kind 0 = central, 1..3 = corner_i.
// ties lists additional cells the point lies on (shared faces).
struct PantsCell {
  int kind = 0;
  std::vector<int> ties;
  // Arc weights a_ij indexed by (min(i,j), max(i,j)), 0-based boundaries;
  // a_ii are the loop arcs.
  std::map<std::pair<int, int>, Rational> arcs;
};
PantsCell membership_pants(const PantsChart& chart);

// Cusped disk: nonnegative chord-weight solution on some triangulation of the
// c-gon, if one exists.
std::optional<std::map<std::pair<int, int>, Rational>> membership_disk(const DiskChart& chart);

// ---------------------------------------------------------------------------
// Curve classes in elementary pieces and reconstruction
// ---------------------------------------------------------------------------

// Arc classes in T_c. Radial(i): from alpha_i to the closed alpha curve.
// Around(lo, hi): both ends on the neighbours of the cyclic interval
// [lo..hi] of enclosed arcs (ends on alpha_{lo-1} and alpha_{hi+1}).
struct TrimArcClass {
  bool radial = true;
  int i = 0;
  int lo = 0, hi = 0;
  friend bool operator<(const TrimArcClass& a, const TrimArcClass& b) {
    return std::tie(a.radial, a.i, a.lo, a.hi) < std::tie(b.radial, b.i, b.lo, b.hi);
  }
  friend bool operator==(const TrimArcClass& a, const TrimArcClass& b) {
    return a.radial == b.radial && a.i == b.i && a.lo == b.lo && a.hi == b.hi;
  }
};

// Arc classes in the pants: a_ij joins boundaries i and j; a_ii is the loop
// separating the other two boundaries.
struct PantsArcClass {
  int i = 0, j = 0;
  friend bool operator<(const PantsArcClass& a, const PantsArcClass& b) {
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  }
};

// Chords of the c-gon: ends on alpha_i and alpha_j, non-adjacent.
struct DiskChordClass {
  int i = 0, j = 0;
};

struct QSystem {
  Rational cores;     // weight of core circles (only when arcs == 0)
  Rational arcs;      // weight of crossing arcs
  Rational twist;     // total twisting mass t
  int sense = +1;     // chart: +1 / -1
};

struct SpiralSystem {
  int sense = +1;
  Rational weight;
};

struct TrimSystem {
  std::vector<std::pair<TrimArcClass, Rational>> arcs;
};
struct PantsSystem {
  std::vector<std::pair<PantsArcClass, Rational>> arcs;
};
struct DiskSystem {
  std::vector<std::pair<DiskChordClass, Rational>> chords;
};

// Reconstruction: explicit disjoint curve system realizing a member chart
// point. Throws std::domain_error on non-member points.
TrimSystem reconstruct_trim(const TrimChart& chart);
PantsSystem reconstruct_pants(const PantsChart& chart);
DiskSystem reconstruct_disk(const DiskChart& chart);
QSystem reconstruct_connector(const ConnectorChart& chart);
SpiralSystem reconstruct_tempty(const TEmptyChart& chart);

// Chart parameters induced back by a system (for round-trip checks).
TrimChart trim_parameters(int c, const TrimSystem& sys);
PantsChart pants_parameters(const PantsSystem& sys);
std::vector<Rational> disk_parameters(int c, const DiskSystem& sys);

// Pairwise disjointness of trim arc classes (nesting rules).
bool trim_classes_compatible(int c, const TrimArcClass& a, const TrimArcClass& b);
bool pants_classes_compatible(const PantsArcClass& a, const PantsArcClass& b);
bool disk_chords_compatible(int c, const DiskChordClass& a, const DiskChordClass& b);

}  // namespace lamina
