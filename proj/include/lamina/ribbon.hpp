#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lamina/rational.hpp"
#include "lamina/surface.hpp"

namespace lamina {

// ---------------------------------------------------------------------------
// Ribbon train tracks in planar elementary hosts.
//
// Hosts are disks, annuli, or pants, modelled as a disk with 0, 1 or 2 holes.
// Boundary circle 0 is the outer circle; holes follow. Each circle carries
// the segment structure of the host pair (alpha/delta arcs or whole circles)
// and is oriented with the surface on its left.
//
// A track is branches plus combinatorial embedding data: interior switches
// with ribbon-ordered sides, transverse stops on alpha segments, tangential
// attachments to delta components contained in the track, and floating
// components positioned by the holes they surround.
// ---------------------------------------------------------------------------

struct HostModel {
  // circles[0] is the outer boundary.
  std::vector<BoundaryCircle> circles;

  int holes() const { return (int)circles.size() - 1; }
  SurfacePair as_pair() const { return SurfacePair{0, circles}; }
};

struct EndRef {
  int branch = -1;
  int which = 0;  // 0 or 1
  friend bool operator==(const EndRef& a, const EndRef& b) {
    return a.branch == b.branch && a.which == b.which;
  }
  friend bool operator<(const EndRef& a, const EndRef& b) {
    return a.branch != b.branch ? a.branch < b.branch : a.which < b.which;
  }
};

struct RibbonTrack {
  HostModel host;
  int n_branches = 0;

  // Interior switch. Side lists are ordered top to bottom in a local frame
  // where side_a ends arrive from the west and side_b ends from the east;
  // side_a[0] and side_b[0] are adjacent across the smooth top of the switch.
  struct Switch {
    std::vector<EndRef> side_a, side_b;
  };
  std::vector<Switch> switches;

  // Transverse end on an alpha segment of a boundary circle. pos orders the
  // stops along the segment in the circle orientation.
  struct Stop {
    EndRef end;
    int circle = 0;
    int seg = 0;
    Rational pos;
  };
  std::vector<Stop> stops;

  // A delta component of the host contained in the track, with its branch
  // attachments. seg == -1 means the whole circle (a delta circle); else the
  // DeltaArc segment index. sense +1 attaches merging forward along the
  // circle orientation, -1 backward.
  struct DeltaAttach {
    EndRef end;
    Rational pos;
    int sense = +1;
  };
  struct DeltaComponent {
    int circle = 0;
    int seg = -1;
    std::vector<DeltaAttach> attaches;
  };
  std::vector<DeltaComponent> delta_components;

  // Floating component (touches no boundary): anchored into the nesting
  // structure by a point on one of its branches. left_side is relative to
  // travel from end 0 to end 1 of the branch.
  struct FloatAnchor {
    int branch = -1;
    bool left_side = true;
    Rational pos;  // along the branch, (0,1)
  };
  struct FloatComponent {
    std::vector<int> surrounds;  // hole indices inside this component
    int depth = 0;               // larger = farther from the holes
    FloatAnchor to_parent;       // where the outward virtual edge attaches
    FloatAnchor to_children;     // where inward virtual edges attach
  };
  std::vector<FloatComponent> floats;

  int new_branch() { return n_branches++; }

  // Every branch end must be used exactly once by a switch side, stop,
  // delta attachment, or smooth float closure (a float branch whose two ends
  // are fused is marked by listing the branch in closed_loops).
  std::vector<int> closed_loops;  // branches forming smooth circles

  std::optional<std::string> check() const;
};

// ---------------------------------------------------------------------------
// Weights
// ---------------------------------------------------------------------------

struct WeightVector {
  std::vector<Rational> w;  // per branch; delta components carry infinity
};

struct SwitchViolation {
  int switch_index;
  Rational side_a_sum, side_b_sum;
};

std::vector<SwitchViolation> check_switch_equations(const RibbonTrack& track,
                                                    const WeightVector& w);

// Geometric measure of a transversal: mu(T) when it misses delta, infinity
// otherwise.
ExtRational geometric_measure(const Rational& mass, bool crosses_delta);

// Normal-form check: no plain branch attaches to a delta arc of the track.
bool no_switch_on_delta_arcs(const RibbonTrack& track);

// ---------------------------------------------------------------------------
// Complement regions
// ---------------------------------------------------------------------------

struct Region {
  int chi = 0;
  int cusps = 0;  // beta count: switch cusps + alpha pieces + delta end fibers
  Rational chi_g;
  int boundary_walks = 0;
  int alpha_pieces = 0;
  int switch_cusps = 0;
  int delta_fibers = 0;
};

std::vector<Region> complement_regions(const RibbonTrack& track);

// chi_g contribution of the fibered neighbourhood: chi(tau) + (cusps-stops)/2.
// Together with the regions it reconstitutes chi_g of the host.
Rational neighbourhood_chi_g_contribution(const RibbonTrack& track);

enum class TrackClass { Good, FairEssential, FairWithHalfReeb, FairWithReeb, NotFair };
std::string to_string(TrackClass c);

TrackClass classify_track(const RibbonTrack& track);
bool detect_half_reeb(const RibbonTrack& track);
bool detect_reeb(const RibbonTrack& track);

// ---------------------------------------------------------------------------
// Splitting and pinching
// ---------------------------------------------------------------------------

enum class SplitDirection { Left, Right, Central };

// A legal split site: branch beta alone on one side of switch sw, with
// exactly two ends on the other side.
struct SplitSite {
  int sw = -1;
  int beta = -1;
  int beta_end = 0;  // which end of beta sits at sw
};

std::vector<SplitSite> all_split_sites(const RibbonTrack& track);

// Token describing the collapsed rectangle, sufficient to pinch back.
struct PinchToken {
  enum Kind { FarSwitch, FarStop, FarAttach, PullThrough } kind = FarSwitch;
  SplitDirection dir = SplitDirection::Central;
  // strand branches bounding the collapsed corridor, with their corridor-side
  // end (the end that was created or rerouted by the split)
  EndRef strand_top, strand_bot;
  // FarStop: the two stops created; FarAttach: the two attachments;
  // PullThrough: the far switch and side where the strands arrived.
  int far_switch = -1;
};

struct SplitResult {
  RibbonTrack track;
  std::optional<WeightVector> weights;
  PinchToken token;
};

// Splits the track at the site. If weights are given the direction must be
// consistent with them (the surviving diagonal weight must be nonnegative;
// Central requires equality).
SplitResult split(const RibbonTrack& track, const SplitSite& site, SplitDirection dir,
                  const std::optional<WeightVector>& w = std::nullopt);

// Collapses the rectangle recorded by the token; inverse of split.
RibbonTrack pinch(const RibbonTrack& track, const PinchToken& token);

// Pinches two parallel floating circles into one component carried along a
// shared stretch. Errors if the floats do not cobound an annulus region.
RibbonTrack pinch_parallel_floats(const RibbonTrack& track, int float_a, int float_b);

// Builds the track obtained by pinching two transversally crossing curves in
// an annulus at their crossing: a core circle crossed once by a boundary to
// boundary arc; used as a constructor for the connector-style switch pair.
RibbonTrack pinch_crossing_in_annulus();

}  // namespace lamina
