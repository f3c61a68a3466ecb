#include "lamina/surface.hpp"

namespace lamina {

int SurfacePair::alpha_arc_count() const {
  int n = 0;
  for (const auto& b : boundary) n += b.alpha_arcs();
  return n;
}

int SurfacePair::alpha_circle_count() const {
  int n = 0;
  for (const auto& b : boundary)
    if (b.segments.size() == 1 && b.segments[0] == BoundarySeg::AlphaCircle) ++n;
  return n;
}

int SurfacePair::delta_circle_count() const {
  int n = 0;
  for (const auto& b : boundary)
    if (b.segments.size() == 1 && b.segments[0] == BoundarySeg::DeltaCircle) ++n;
  return n;
}

std::optional<std::string> SurfacePair::check() const {
  if (genus < 0) return "negative genus";
  for (size_t i = 0; i < boundary.size(); ++i) {
    const auto& segs = boundary[i].segments;
    if (segs.empty()) return "boundary circle " + std::to_string(i) + " has no segments";
    if (segs.size() == 1) {
      if (segs[0] == BoundarySeg::AlphaArc || segs[0] == BoundarySeg::DeltaArc)
        return "boundary circle " + std::to_string(i) + " has a single open arc";
      continue;
    }
    if (segs.size() % 2 != 0)
      return "boundary circle " + std::to_string(i) + " has odd segment count";
    for (size_t j = 0; j < segs.size(); ++j) {
      if (segs[j] == BoundarySeg::AlphaCircle || segs[j] == BoundarySeg::DeltaCircle)
        return "boundary circle " + std::to_string(i) + " mixes circle and arc segments";
      BoundarySeg next = segs[(j + 1) % segs.size()];
      if (segs[j] == next)
        return "boundary circle " + std::to_string(i) + " has non-alternating arcs";
    }
  }
  return std::nullopt;
}

std::string to_string(ElementaryKind k) {
  switch (k) {
    case ElementaryKind::Pants: return "P";
    case ElementaryKind::Connector: return "Q";
    case ElementaryKind::TrimAnnulus: return "Tc";
    case ElementaryKind::TrimAnnulusEmpty: return "Tempty";
    case ElementaryKind::CuspedDisk: return "Dc";
    case ElementaryKind::NonElementary: return "non-elementary";
  }
  return "?";
}

Rational chi_g(const SurfacePair& pair) {
  return Rational(pair.euler()) - Rational(pair.alpha_arc_count(), 2);
}

Rational chi_g_cusped(const CuspedSurface& s) {
  return Rational(s.euler()) - Rational(s.boundary_cusps, 2) - Rational(s.interior_cusps);
}

Classification classify_elementary(const SurfacePair& pair) {
  Classification out;
  if (pair.genus != 0) return out;
  auto kind_of = [](const BoundaryCircle& b) {
    if (b.segments.size() == 1) return b.segments[0];
    // Mixed arc circle; report via AlphaArc as a tag.
    return BoundarySeg::AlphaArc;
  };
  int nb = pair.num_boundary();
  if (nb == 1) {
    const auto& b0 = pair.boundary[0];
    if (b0.is_circle_seg()) {
      if (b0.segments[0] == BoundarySeg::DeltaCircle) {
        out.kind = ElementaryKind::CuspedDisk;  // D_0: all-delta boundary
        out.c = 0;
      }
      return out;
    }
    int c = b0.alpha_arcs();
    out.kind = ElementaryKind::CuspedDisk;
    out.c = c;
    return out;
  }
  if (nb == 2) {
    BoundarySeg k0 = kind_of(pair.boundary[0]);
    BoundarySeg k1 = kind_of(pair.boundary[1]);
    bool c0 = pair.boundary[0].is_circle_seg();
    bool c1 = pair.boundary[1].is_circle_seg();
    if (c0 && c1 && k0 == BoundarySeg::AlphaCircle && k1 == BoundarySeg::AlphaCircle) {
      out.kind = ElementaryKind::Connector;
      return out;
    }
    // trim annuli: one alpha circle, the other side either delta circle or arcs
    for (int flip = 0; flip < 2; ++flip) {
      const auto& circ = pair.boundary[flip];
      const auto& other = pair.boundary[1 - flip];
      if (circ.is_circle_seg() && circ.segments[0] == BoundarySeg::AlphaCircle) {
        if (other.is_circle_seg() && other.segments[0] == BoundarySeg::DeltaCircle) {
          out.kind = ElementaryKind::TrimAnnulusEmpty;
          return out;
        }
        if (!other.is_circle_seg() && other.alpha_arcs() >= 1) {
          out.kind = ElementaryKind::TrimAnnulus;
          out.c = other.alpha_arcs();
          return out;
        }
      }
    }
    return out;
  }
  if (nb == 3) {
    for (const auto& b : pair.boundary)
      if (!(b.is_circle_seg() && b.segments[0] == BoundarySeg::AlphaCircle)) return out;
    out.kind = ElementaryKind::Pants;
    return out;
  }
  return out;
}

SurfacePair synthesize_elementary(ElementaryKind kind, int c) {
  SurfacePair p;
  auto alpha_circle = [] {
    BoundaryCircle b;
    b.segments = {BoundarySeg::AlphaCircle};
    return b;
  };
  auto delta_circle = [] {
    BoundaryCircle b;
    b.segments = {BoundarySeg::DeltaCircle};
    return b;
  };
  auto arc_circle = [](int n) {
    BoundaryCircle b;
    for (int i = 0; i < n; ++i) {
      b.segments.push_back(BoundarySeg::AlphaArc);
      b.segments.push_back(BoundarySeg::DeltaArc);
    }
    return b;
  };
  switch (kind) {
    case ElementaryKind::Pants:
      p.boundary = {alpha_circle(), alpha_circle(), alpha_circle()};
      break;
    case ElementaryKind::Connector:
      p.boundary = {alpha_circle(), alpha_circle()};
      break;
    case ElementaryKind::TrimAnnulus:
      if (c < 1) throw std::invalid_argument("TrimAnnulus needs c >= 1");
      p.boundary = {alpha_circle(), arc_circle(c)};
      break;
    case ElementaryKind::TrimAnnulusEmpty:
      p.boundary = {alpha_circle(), delta_circle()};
      break;
    case ElementaryKind::CuspedDisk:
      if (c < 0) throw std::invalid_argument("CuspedDisk needs c >= 0");
      p.boundary = {c == 0 ? delta_circle() : arc_circle(c)};
      break;
    case ElementaryKind::NonElementary:
      throw std::invalid_argument("cannot synthesize NonElementary");
  }
  return p;
}

CuspedSurface collapse_to_cusped(const SurfacePair& pair) {
  CuspedSurface s;
  s.genus = pair.genus;
  s.interior_cusps = pair.alpha_circle_count();
  s.boundary_cusps = pair.alpha_arc_count();
  // Alpha circles collapse to interior cusp points; every other boundary
  // circle survives.
  s.boundary_circles = pair.num_boundary() - s.interior_cusps;
  return s;
}

}  // namespace lamina
