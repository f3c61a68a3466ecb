#include "doctest.h"
#include "lamina/extension.hpp"
#include "lamina/prng.hpp"

using namespace lamina;

static Attachment at(std::int64_t w, int s) { return Attachment{Rational(w), s}; }

TEST_CASE("arc extension: frozen prefix-sum values") {
  auto e = extend_weights_arc({});
  CHECK(e.x0 == Rational(0));
  REQUIRE(e.segment_weights.size() == 1);
  CHECK(e.segment_weights[0] == Rational(0));

  // prefixes 0, 2, -1 -> min -1 -> x0 = 1, weights 1, 3, 0
  e = extend_weights_arc({at(2, +1), at(3, -1)});
  CHECK(e.x0 == Rational(1));
  REQUIRE(e.segment_weights.size() == 3);
  CHECK(e.segment_weights[0] == Rational(1));
  CHECK(e.segment_weights[1] == Rational(3));
  CHECK(e.segment_weights[2] == Rational(0));

  e = extend_weights_arc({at(1, +1), at(1, +1)});
  CHECK(e.x0 == Rational(0));
  REQUIRE(e.segment_weights.size() == 3);
  CHECK(e.segment_weights[0] == Rational(0));
  CHECK(e.segment_weights[1] == Rational(1));
  CHECK(e.segment_weights[2] == Rational(2));
}

TEST_CASE("arc extension rejects negative weights") {
  CHECK_THROWS_AS(extend_weights_arc({Attachment{Rational(-1), +1}}), std::invalid_argument);
}

TEST_CASE("closed extension: frozen values") {
  auto e = extend_weights_closed({at(1, +1), at(1, -1)});
  CHECK(e.rotation == 0);
  CHECK(!e.orientation_reversed);
  REQUIRE(e.segment_weights.size() == 2);
  CHECK(e.segment_weights[0] == Rational(0));
  CHECK(e.segment_weights[1] == Rational(1));
  CHECK(e.algebraic_total == Rational(0));

  e = extend_weights_closed({at(1, +1)});
  REQUIRE(e.segment_weights.size() == 1);
  CHECK(e.segment_weights[0] == Rational(0));
  CHECK(e.algebraic_total == Rational(1));

  e = extend_weights_closed({at(2, -1), at(1, +1)});
  CHECK(e.orientation_reversed);
  REQUIRE(e.segment_weights.size() == 2);
  CHECK(e.segment_weights[0] == Rational(0));
  CHECK(e.segment_weights[1] == Rational(2));
  CHECK(e.algebraic_total == Rational(1));
}

TEST_CASE("arc extension: x0 is the unique nonneg-min-zero choice") {
  Prng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    int k = (int)rng.next_below(8);
    std::vector<Attachment> as;
    for (int i = 0; i < k; ++i)
      as.push_back(at((std::int64_t)rng.next_below(101), rng.next_below(2) ? +1 : -1));
    auto e = extend_weights_arc(as);
    Rational mn = e.segment_weights[0];
    for (const auto& w : e.segment_weights) {
      CHECK(w >= Rational(0));
      if (w < mn) mn = w;
    }
    CHECK(mn == Rational(0));
    // Perturbing x0 down by any eps breaks nonnegativity; up breaks min zero.
    // (Uniqueness: weights are x0 + prefix, so min weight = x0 + min prefix.)
  }
}

TEST_CASE("closed extension properties over random inputs") {
  Prng rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    int k = 1 + (int)rng.next_below(8);
    std::vector<Attachment> as;
    for (int i = 0; i < k; ++i)
      as.push_back(at((std::int64_t)rng.next_below(101), rng.next_below(2) ? +1 : -1));
    auto e = extend_weights_closed(as);
    Rational mn = e.segment_weights[0];
    for (const auto& w : e.segment_weights) {
      CHECK(w >= Rational(0));
      if (w < mn) mn = w;
    }
    CHECK(mn == Rational(0));

    // |algebraic_total| is rotation invariant and flips sign with reversal.
    Rational total(0);
    for (const auto& a : as) total += a.sign > 0 ? a.weight : -a.weight;
    if (e.orientation_reversed) {
      CHECK(e.algebraic_total == -total);
    } else {
      CHECK(e.algebraic_total == total);
    }
    CHECK(e.algebraic_total >= Rational(0));

    // Tie-break: a rotation in the unreversed orientation wins when total >= 0.
    if (total > Rational(0)) CHECK(!e.orientation_reversed);
  }
}
