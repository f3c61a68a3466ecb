#include "lamina/extension.hpp"

#include <stdexcept>

namespace lamina {

static void check_inputs(const std::vector<Attachment>& attachments) {
  for (const auto& a : attachments) {
    if (a.weight < Rational(0)) throw std::invalid_argument("negative attachment weight");
    if (a.sign != 1 && a.sign != -1) throw std::invalid_argument("attachment sign must be +-1");
  }
}

SpiralExtension extend_weights_arc(const std::vector<Attachment>& attachments) {
  check_inputs(attachments);
  SpiralExtension out;
  Rational prefix(0), min_prefix(0);
  std::vector<Rational> prefixes{Rational(0)};
  for (const auto& a : attachments) {
    prefix += a.sign > 0 ? a.weight : -a.weight;
    prefixes.push_back(prefix);
    if (prefix < min_prefix) min_prefix = prefix;
  }
  out.x0 = min_prefix < Rational(0) ? -min_prefix : Rational(0);
  for (const auto& p : prefixes) out.segment_weights.push_back(out.x0 + p);
  out.algebraic_total = prefix;
  return out;
}

SpiralExtension extend_weights_closed(const std::vector<Attachment>& attachments) {
  check_inputs(attachments);
  if (attachments.empty()) throw std::invalid_argument("closed extension needs attachments");
  const int k = (int)attachments.size();

  auto try_orientation = [&](const std::vector<Attachment>& seq, bool reversed,
                             SpiralExtension& out) {
    for (int rot = 0; rot < k; ++rot) {
      Rational prefix(0);
      bool ok = true;
      std::vector<Rational> partial;
      for (int i = 0; i < k; ++i) {
        const auto& a = seq[(rot + i) % k];
        prefix += a.sign > 0 ? a.weight : -a.weight;
        if (prefix < Rational(0)) {
          ok = false;
          break;
        }
        partial.push_back(prefix);
      }
      if (!ok) continue;
      out.x0 = Rational(0);
      out.segment_weights.clear();
      out.segment_weights.push_back(Rational(0));
      for (int i = 0; i + 1 < k; ++i) out.segment_weights.push_back(partial[i]);
      out.algebraic_total = partial.back();
      out.rotation = rot;
      out.orientation_reversed = reversed;
      return true;
    }
    return false;
  };

  SpiralExtension out;
  if (try_orientation(attachments, false, out)) return out;

  // Reverse the orientation: traversal order reverses and every sign flips.
  std::vector<Attachment> rev(attachments.rbegin(), attachments.rend());
  for (auto& a : rev) a.sign = -a.sign;
  if (try_orientation(rev, true, out)) return out;

  // The cycle lemma guarantees a valid rotation in one of the orientations.
  throw std::logic_error("no valid rotation in either orientation");
}

}  // namespace lamina
