#include "doctest.h"
#include "lamina/surface.hpp"

using namespace lamina;

TEST_CASE("chi_g on the named pairs") {
  // pants: genus 0, three alpha circles, c = 0
  auto pants = synthesize_elementary(ElementaryKind::Pants);
  CHECK(chi_g(pants) == Rational(-1));

  // digon: disk with two alpha arcs
  auto digon = synthesize_elementary(ElementaryKind::CuspedDisk, 2);
  CHECK(chi_g(digon) == Rational(0));

  // T_3: annulus, one alpha circle, three arcs
  auto t3 = synthesize_elementary(ElementaryKind::TrimAnnulus, 3);
  CHECK(chi_g(t3) == Rational(-3, 2));

  // monogon
  auto monogon = synthesize_elementary(ElementaryKind::CuspedDisk, 1);
  CHECK(chi_g(monogon) == Rational(1, 2));

  for (int c = 0; c <= 8; ++c) {
    if (c >= 1) CHECK(chi_g(synthesize_elementary(ElementaryKind::TrimAnnulus, c)) == Rational(-c, 2));
  }
}

TEST_CASE("chi_g on cusped surfaces") {
  CuspedSurface collapsed_pants{0, 0, 3, 0};
  CHECK(chi_g_cusped(collapsed_pants) == Rational(-1));
  CuspedSurface monogon{0, 1, 0, 1};
  CHECK(chi_g_cusped(monogon) == Rational(1, 2));
  CuspedSurface disk4{0, 1, 0, 4};
  CHECK(chi_g_cusped(disk4) == Rational(-1));
}

TEST_CASE("collapsing preserves chi_g") {
  for (auto kind : {ElementaryKind::Pants, ElementaryKind::Connector, ElementaryKind::TrimAnnulusEmpty}) {
    auto p = synthesize_elementary(kind);
    CHECK(chi_g(p) == chi_g_cusped(collapse_to_cusped(p)));
  }
  for (int c = 1; c <= 5; ++c) {
    auto p = synthesize_elementary(ElementaryKind::TrimAnnulus, c);
    CHECK(chi_g(p) == chi_g_cusped(collapse_to_cusped(p)));
    auto d = synthesize_elementary(ElementaryKind::CuspedDisk, c);
    CHECK(chi_g(d) == chi_g_cusped(collapse_to_cusped(d)));
  }
}

TEST_CASE("classification of elementary pairs") {
  BoundaryCircle alpha{{BoundarySeg::AlphaCircle}};
  BoundaryCircle delta{{BoundarySeg::DeltaCircle}};

  SurfacePair tempty{0, {alpha, delta}};
  CHECK(classify_elementary(tempty).kind == ElementaryKind::TrimAnnulusEmpty);

  SurfacePair connector{0, {alpha, alpha}};
  CHECK(classify_elementary(connector).kind == ElementaryKind::Connector);

  SurfacePair genus1{1, {alpha}};
  CHECK(classify_elementary(genus1).kind == ElementaryKind::NonElementary);

  auto t2 = synthesize_elementary(ElementaryKind::TrimAnnulus, 2);
  auto cls = classify_elementary(t2);
  CHECK(cls.kind == ElementaryKind::TrimAnnulus);
  CHECK(cls.c == 2);

  SurfacePair four_circles{0, {alpha, alpha, alpha, alpha}};
  CHECK(classify_elementary(four_circles).kind == ElementaryKind::NonElementary);
}

TEST_CASE("classify . synthesize is the identity on elementary kinds") {
  for (int c = 1; c <= 6; ++c) {
    auto t = synthesize_elementary(ElementaryKind::TrimAnnulus, c);
    REQUIRE(!t.check());
    auto cls = classify_elementary(t);
    CHECK(cls.kind == ElementaryKind::TrimAnnulus);
    CHECK(cls.c == c);
    auto again = synthesize_elementary(cls.kind, cls.c);
    CHECK(classify_elementary(again).kind == cls.kind);
  }
  for (auto kind : {ElementaryKind::Pants, ElementaryKind::Connector, ElementaryKind::TrimAnnulusEmpty}) {
    auto p = synthesize_elementary(kind);
    REQUIRE(!p.check());
    CHECK(classify_elementary(p).kind == kind);
  }
  for (int c = 0; c <= 5; ++c) {
    auto d = synthesize_elementary(ElementaryKind::CuspedDisk, c);
    auto cls = classify_elementary(d);
    CHECK(cls.kind == ElementaryKind::CuspedDisk);
    CHECK(cls.c == c);
  }
}

TEST_CASE("structural validation rejects malformed boundaries") {
  SurfacePair bad;
  bad.boundary.push_back(BoundaryCircle{{BoundarySeg::AlphaArc, BoundarySeg::AlphaArc}});
  CHECK(bad.check().has_value());
  SurfacePair bad2;
  bad2.genus = -1;
  CHECK(bad2.check().has_value());
  SurfacePair odd;
  odd.boundary.push_back(
      BoundaryCircle{{BoundarySeg::AlphaArc, BoundarySeg::DeltaArc, BoundarySeg::AlphaArc}});
  CHECK(odd.check().has_value());
}
