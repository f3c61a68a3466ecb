#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamina/rational.hpp"

namespace lamina {

// One segment of a boundary circle. Arc segments alternate alpha/delta along
// the circle; a whole circle carries a single *Circle segment.
enum class BoundarySeg { AlphaArc, DeltaArc, AlphaCircle, DeltaCircle };

struct BoundaryCircle {
  std::vector<BoundarySeg> segments;

  bool is_circle_seg() const {
    return segments.size() == 1 && (segments[0] == BoundarySeg::AlphaCircle ||
                                    segments[0] == BoundarySeg::DeltaCircle);
  }
  int alpha_arcs() const {
    int n = 0;
    for (auto s : segments)
      if (s == BoundarySeg::AlphaArc) ++n;
    return n;
  }
};

// Compact orientable surface with boundary, partitioned into alpha (arcs and
// whole circles) and delta (the complementary closure). Orientation is fixed
// once: boundary circles carry the induced counterclockwise orientation.
struct SurfacePair {
  int genus = 0;
  std::vector<BoundaryCircle> boundary;

  int num_boundary() const { return (int)boundary.size(); }
  int euler() const { return 2 - 2 * genus - num_boundary(); }
  int alpha_arc_count() const;     // c
  int alpha_circle_count() const;  // b
  int delta_circle_count() const;

  // Structural validity: alternation on each circle, nonneg genus.
  std::optional<std::string> check() const;
};

// Truncation-collapsed form: each alpha arc becomes a boundary cusp, each
// alpha circle an interior cusp.
struct CuspedSurface {
  int genus = 0;
  int boundary_circles = 0;
  int interior_cusps = 0;  // b
  int boundary_cusps = 0;  // c

  int euler() const { return 2 - 2 * genus - boundary_circles; }
};

enum class ElementaryKind {
  Pants,
  Connector,
  TrimAnnulus,       // T_c, c >= 1
  TrimAnnulusEmpty,  // T_empty
  CuspedDisk,        // D_c
  NonElementary,
};

struct Classification {
  ElementaryKind kind = ElementaryKind::NonElementary;
  int c = 0;  // arc count for TrimAnnulus / CuspedDisk
};

std::string to_string(ElementaryKind k);

// chi_g = chi(S) - c/2.
Rational chi_g(const SurfacePair& pair);

// chi_g = chi(S) - c/2 - b for the cusped model.
Rational chi_g_cusped(const CuspedSurface& s);

Classification classify_elementary(const SurfacePair& pair);

// Canonical representative of an elementary kind (used by the idempotence
// property: classify . synthesize = id).
SurfacePair synthesize_elementary(ElementaryKind kind, int c = 0);

CuspedSurface collapse_to_cusped(const SurfacePair& pair);

}  // namespace lamina
