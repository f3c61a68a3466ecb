#pragma once

// Test-only oracles, kept independent of the library's reconstruction and
// membership paths. Realizability is decided by exhaustive search over
// disjoint arc systems, not by the chart formulas under test.

#include <map>
#include <vector>

#include "lamina/catalog.hpp"

namespace lamina_test {

using lamina::Rational;

// Exhaustive realizability of integer trim parameters (x, y) by a disjoint
// system of radial and around arcs. Works by peeling: radial weights are a
// composition of y over the arcs; the leftovers must be realizable by a
// laminar family of around arcs (innermost arcs enclose only exhausted
// sites).
class TrimEnumerationOracle {
 public:
  explicit TrimEnumerationOracle(int c) : c_(c) {}

  bool realizable(const std::vector<int>& x, int y) {
    if ((int)x.size() != c_ || y < 0) return false;
    for (int v : x)
      if (v < 0) return false;
    // Work in half-integer units: arc systems realizing integer boundary
    // data can need weight-1/2 arcs (degree systems are half-integral).
    std::vector<int> x2(c_);
    for (int i = 0; i < c_; ++i) x2[i] = 2 * x[i];
    // choose radial weights r_i <= x_i with sum = y
    std::vector<int> r(c_, 0);
    return choose_radials(x2, 2 * y, 0, r);
  }

 private:
  bool choose_radials(const std::vector<int>& x, int rest, int idx, std::vector<int>& r) {
    if (idx == c_) {
      if (rest != 0) return false;
      std::vector<int> e(c_);
      std::vector<char> blocked(c_);
      for (int i = 0; i < c_; ++i) {
        e[i] = x[i] - r[i];
        blocked[i] = r[i] > 0;  // a radial leaves the enclosed disk: no arc may cover it
      }
      memo_.clear();
      blocked_ = blocked;
      return arcs_only(e);
    }
    for (int v = 0; v <= std::min(x[idx], rest); ++v) {
      r[idx] = v;
      if (choose_radials(x, rest - v, idx + 1, r)) return true;
    }
    r[idx] = 0;
    return false;
  }

  bool arcs_only(std::vector<int> e) {
    auto it = memo_.find(e);
    if (it != memo_.end()) return it->second;
    bool zero = true;
    for (int v : e) zero = zero && v == 0;
    if (zero) return memo_[e] = true;
    bool ok = false;
    // Remove one innermost around arc: enclosed interval currently zero and
    // free of radials, positive budget at both end sites.
    for (int lo = 0; lo < c_ && !ok; ++lo) {
      for (int len = 1; len <= c_ - 1 && !ok; ++len) {
        int hi = (lo + len - 1) % c_;
        bool inner_free = true;
        for (int k = 0; k < len; ++k) {
          int s = (lo + k) % c_;
          inner_free = inner_free && e[s] == 0 && !blocked_[s];
        }
        if (!inner_free) continue;
        int e1 = (lo + c_ - 1) % c_, e2 = (hi + 1) % c_;
        if (e1 == e2) {
          if (e[e1] < 2) continue;
          e[e1] -= 2;
          ok = arcs_only(e);
          e[e1] += 2;
        } else {
          if (e[e1] < 1 || e[e2] < 1) continue;
          e[e1] -= 1;
          e[e2] -= 1;
          ok = arcs_only(e);
          e[e1] += 1;
          e[e2] += 1;
        }
      }
    }
    return memo_[e] = ok;
  }

  int c_;
  std::map<std::vector<int>, bool> memo_;
  std::vector<char> blocked_;
};

// Exhaustive pants oracle: all systems over the six arc classes with the
// pairwise-disjointness table, weights up to a cap; collects induced
// boundary-weight triples.
struct PantsEnumeration {
  // weights indexed a12, a13, a23, a11, a22, a33
  struct System {
    int a12, a13, a23, a11, a22, a33;
  };
  static bool disjoint(const System& s) {
    // loops at different boundaries exclude each other, and a loop excludes
    // the opposite seam arc.
    int loops = (s.a11 > 0) + (s.a22 > 0) + (s.a33 > 0);
    if (loops > 1) return false;
    if (s.a11 > 0 && s.a23 > 0) return false;
    if (s.a22 > 0 && s.a13 > 0) return false;
    if (s.a33 > 0 && s.a12 > 0) return false;
    return true;
  }
  static void boundary_weights(const System& s, int y[3]) {
    y[0] = s.a12 + s.a13 + 2 * s.a11;
    y[1] = s.a12 + s.a23 + 2 * s.a22;
    y[2] = s.a13 + s.a23 + 2 * s.a33;
  }
  template <typename F>
  static void for_each(int cap, F&& f) {
    System s;
    for (s.a12 = 0; s.a12 <= cap; ++s.a12)
      for (s.a13 = 0; s.a13 <= cap; ++s.a13)
        for (s.a23 = 0; s.a23 <= cap; ++s.a23)
          for (s.a11 = 0; s.a11 <= cap; ++s.a11)
            for (s.a22 = 0; s.a22 <= cap; ++s.a22)
              for (s.a33 = 0; s.a33 <= cap; ++s.a33)
                if (disjoint(s)) f(s);
  }
};

}  // namespace lamina_test
