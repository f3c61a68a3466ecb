#pragma once

#include <vector>

#include "lamina/rational.hpp"

namespace lamina {

// One branch attachment along an oriented delta component: the branch weight
// and the sense of branching (+1 with the orientation, -1 against).
struct Attachment {
  Rational weight;
  int sign = +1;
};

// Result of extending an invariant weight vector over a delta arc or circle.
// segment_weights lists the weights induced on the segments of the component,
// in order; the minimum entry is always 0.
struct SpiralExtension {
  Rational x0;                            // weight at the initial segment (arc case)
  std::vector<Rational> segment_weights;  // one per segment between attachments
  Rational algebraic_total;               // signed sum in the chosen orientation
  int rotation = 0;                       // starting index chosen (closed case)
  bool orientation_reversed = false;      // closed case only
};

// Arc case: x0 is the unique value making every partial sum of
// x0 + sum(eps_i x_i) nonnegative with minimum exactly 0.
SpiralExtension extend_weights_arc(const std::vector<Attachment>& attachments);

// Closed case: chooses the rotation (smallest index, unreversed preferred)
// making all partial sums of sum(eps_i x_i) nonnegative; the segment before
// the first attachment gets weight 0. The leftover switch deficit equals
// algebraic_total, the measure of the spiral.
SpiralExtension extend_weights_closed(const std::vector<Attachment>& attachments);

}  // namespace lamina
