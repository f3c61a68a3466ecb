#include "lamina/catalog.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace lamina {

// ---------------------------------------------------------------------------
// Connector plane model
// ---------------------------------------------------------------------------

PlanePoint connector_plane_point(const ConnectorChart& chart) {
  if (chart.chart != 1 && chart.chart != 2) throw std::invalid_argument("connector chart must be 1 or 2");
  if (chart.t < Rational(0) || chart.y < Rational(0))
    throw std::invalid_argument("connector weights must be nonnegative");
  PlanePoint p;
  p.u = chart.t - chart.y;
  Rational m = chart.t < chart.y ? chart.t : chart.y;
  p.v = chart.chart == 1 ? m : -m;
  return p;
}

ConnectorChart connector_from_plane(const PlanePoint& p) {
  ConnectorChart c;
  c.chart = p.v < Rational(0) ? 2 : 1;
  Rational av = p.v.abs();
  c.t = (p.u > Rational(0) ? p.u : Rational(0)) + av;
  c.y = (p.u < Rational(0) ? -p.u : Rational(0)) + av;
  return c;
}

Rational connector_boundary_weight(const PlanePoint& p) {
  return (p.u < Rational(0) ? -p.u : Rational(0)) + p.v.abs();
}

Rational connector_core_weight(const PlanePoint& p) {
  return (p.u > Rational(0) ? p.u : Rational(0)) + p.v.abs();
}

// ---------------------------------------------------------------------------
// Membership
// ---------------------------------------------------------------------------

static void check_trim(const TrimChart& chart) {
  if (chart.c < 1 || (int)chart.x.size() != chart.c)
    throw std::invalid_argument("trim chart needs c >= 1 weights");
  for (const auto& v : chart.x)
    if (v < Rational(0)) throw std::invalid_argument("trim weights must be nonnegative");
  if (chart.y < Rational(0)) throw std::invalid_argument("trim y must be nonnegative");
}

std::optional<TrimCell> membership_trim(const TrimChart& chart) {
  check_trim(chart);
  Rational sum(0);
  for (const auto& v : chart.x) sum += v;
  TrimCell cell;
  cell.radial = (sum == chart.y);
  if (sum >= chart.y) {
    for (int i = 0; i < chart.c; ++i)
      if (chart.x[i].is_zero()) cell.faces.push_back(i);
  }
  if (!cell.radial && cell.faces.empty()) return std::nullopt;
  return cell;
}

PantsCell membership_pants(const PantsChart& chart) {
  for (int i = 0; i < 3; ++i)
    if (chart[i] < Rational(0)) throw std::invalid_argument("pants weights must be nonnegative");
  PantsCell cell;
  auto excess = [&](int i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    return chart[i] - chart[j] - chart[k];
  };
  int corner = -1;
  for (int i = 0; i < 3; ++i) {
    Rational e = excess(i);
    if (e > Rational(0)) corner = i;
    if (e.is_zero()) cell.ties.push_back(i + 1);
  }
  auto set_arc = [&](int i, int j, Rational w) {
    cell.arcs[{std::min(i, j), std::max(i, j)}] = w;
  };
  if (corner < 0) {
    cell.kind = 0;
    for (int i = 0; i < 3; ++i) {
      int j = (i + 1) % 3, k = (i + 2) % 3;
      set_arc(j, k, (chart[j] + chart[k] - chart[i]) / Rational(2));
    }
    set_arc(0, 0, Rational(0));
    set_arc(1, 1, Rational(0));
    set_arc(2, 2, Rational(0));
  } else {
    int i = corner, j = (i + 1) % 3, k = (i + 2) % 3;
    cell.kind = i + 1;
    set_arc(i, i, excess(i) / Rational(2));
    set_arc(i, j, chart[j]);
    set_arc(i, k, chart[k]);
    set_arc(j, k, Rational(0));
    set_arc(j, j, Rational(0));
    set_arc(k, k, Rational(0));
  }
  return cell;
}

// Triangulation enumeration for the cusped disk. Vertices are the alpha arcs
// 0..c-1 of the c-gon; chords join non-adjacent vertices.
static void triangulate_range(int lo, int hi, std::vector<std::pair<int, int>>& cur,
                              const std::function<void()>& done) {
  // Triangulates the convex polygon on vertices lo..hi using the edge (lo,hi).
  if (hi - lo < 2) {
    done();
    return;
  }
  for (int k = lo + 1; k < hi; ++k) {
    size_t mark = cur.size();
    if (k - lo >= 2) cur.push_back({lo, k});
    if (hi - k >= 2) cur.push_back({k, hi});
    size_t mark2 = cur.size();
    // recurse into both sub-polygons
    std::function<void()> inner = [&]() { triangulate_range(k, hi, cur, done); };
    triangulate_range(lo, k, cur, inner);
    cur.resize(mark);
    (void)mark2;
  }
}

// Feasibility of a small inequality system sum(a_i x_i) + b >= 0 by
// Fourier-Motzkin elimination; returns a witness point if feasible.
// Rows are (a_0..a_{k-1}, b).
static std::optional<std::vector<Rational>> fm_feasible(std::vector<std::vector<Rational>> rows,
                                                        int k) {
  if (k == 0) {
    for (auto& r : rows)
      if (r.back() < Rational(0)) return std::nullopt;
    return std::vector<Rational>{};
  }
  std::vector<std::vector<Rational>> lower, upper, rest;
  for (auto& r : rows) {
    Rational a = r[k - 1];
    if (a.is_zero()) {
      rest.push_back(r);
    } else if (a > Rational(0)) {
      lower.push_back(r);  // x_{k-1} >= -(rest)/a
    } else {
      upper.push_back(r);  // x_{k-1} <= -(rest)/a
    }
  }
  // Squeeze rest rows to (a_0..a_{k-2}, b).
  for (auto& r : rest) {
    r[k - 1] = r[k];
    r.resize(k);
  }
  for (auto& lo : lower)
    for (auto& up : upper) {
      // lo: a x + L >= 0 (a>0), up: -a' x + U >= 0 (a'>0): combine a'*L + a*U >= 0.
      std::vector<Rational> comb(k, Rational(0));
      Rational a = lo[k - 1], ap = -up[k - 1];
      for (int j = 0; j < k - 1; ++j) comb[j] = ap * lo[j] + a * up[j];
      comb[k - 1] = ap * lo[k] + a * up[k];  // combined constant
      rest.push_back(comb);
    }
  auto inner = fm_feasible(rest, k - 1);
  if (!inner) return std::nullopt;
  std::vector<Rational> point = *inner;
  point.resize(k, Rational(0));
  // Pick x_{k-1} within [max lower bound, min upper bound].
  bool has_lo = false, has_up = false;
  Rational lo_val(0), up_val(0);
  auto eval_rest = [&](const std::vector<Rational>& r) {
    Rational s = r[k];  // constant
    for (int j = 0; j < k - 1; ++j) s += r[j] * point[j];
    return s;
  };
  for (auto& r : lower) {
    Rational bound = -eval_rest(r) / r[k - 1];
    if (!has_lo || bound > lo_val) {
      lo_val = bound;
      has_lo = true;
    }
  }
  for (auto& r : upper) {
    Rational bound = -eval_rest(r) / r[k - 1];
    if (!has_up || bound < up_val) {
      up_val = bound;
      has_up = true;
    }
  }
  Rational x;
  if (has_lo) {
    x = lo_val;
  } else if (has_up) {
    x = up_val < Rational(0) ? up_val : Rational(0);
  } else {
    x = Rational(0);
  }
  point[k - 1] = x;
  return point;
}

std::optional<std::map<std::pair<int, int>, Rational>> membership_disk(const DiskChart& chart) {
  int c = chart.c;
  if (c < 3 || (int)chart.x.size() != c) throw std::invalid_argument("disk chart needs c >= 3 weights");
  if (c > 16) throw std::invalid_argument("disk chart membership supports c <= 16");
  for (const auto& v : chart.x)
    if (v < Rational(0)) throw std::invalid_argument("disk weights must be nonnegative");

  bool all_zero = true;
  for (const auto& v : chart.x) all_zero = all_zero && v.is_zero();
  if (all_zero) return std::map<std::pair<int, int>, Rational>{};
  if (c == 3) return std::nullopt;  // no essential chords

  std::optional<std::map<std::pair<int, int>, Rational>> found;
  std::vector<std::pair<int, int>> cur;
  std::function<void()> check = [&]() {
    if (found) return;
    const std::vector<std::pair<int, int>>& diags = cur;
    int n = (int)diags.size();
    // Degree equations deg(v) = x_v, Gauss-Jordan over the diagonal weights.
    std::vector<std::vector<Rational>> A(c, std::vector<Rational>(n + 1, Rational(0)));
    for (int t = 0; t < n; ++t) {
      A[diags[t].first][t] = Rational(1);
      A[diags[t].second][t] = Rational(1);
    }
    for (int v = 0; v < c; ++v) A[v][n] = chart.x[v];
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < c; ++col) {
      int pr = -1;
      for (int r = row; r < c; ++r)
        if (!A[r][col].is_zero()) {
          pr = r;
          break;
        }
      if (pr < 0) continue;
      std::swap(A[row], A[pr]);
      Rational inv = Rational(1) / A[row][col];
      for (int j = col; j <= n; ++j) A[row][j] *= inv;
      for (int r = 0; r < c; ++r) {
        if (r == row || A[r][col].is_zero()) continue;
        Rational f = A[r][col];
        for (int j = col; j <= n; ++j) A[r][j] -= f * A[row][j];
      }
      pivot_col.push_back(col);
      ++row;
    }
    for (int r = row; r < c; ++r)
      if (!A[r][n].is_zero()) return;  // inconsistent
    int rank = row;
    std::vector<int> free_cols;
    {
      std::vector<char> is_pivot(n, 0);
      for (int pc : pivot_col) is_pivot[pc] = 1;
      for (int t = 0; t < n; ++t)
        if (!is_pivot[t]) free_cols.push_back(t);
    }
    int k = (int)free_cols.size();
    std::vector<Rational> w(n, Rational(0));
    if (k == 0) {
      for (int r = 0; r < rank; ++r) {
        if (A[r][n] < Rational(0)) return;
        w[pivot_col[r]] = A[r][n];
      }
    } else {
      // pivot_r = rhs_r - sum_f A[r][f] * w_f; need pivot_r >= 0 and w_f >= 0.
      std::vector<std::vector<Rational>> ineq;
      for (int r = 0; r < rank; ++r) {
        std::vector<Rational> rr(k + 1, Rational(0));
        for (int fi = 0; fi < k; ++fi) rr[fi] = -A[r][free_cols[fi]];
        rr[k] = A[r][n];
        ineq.push_back(rr);
      }
      for (int fi = 0; fi < k; ++fi) {
        std::vector<Rational> rr(k + 1, Rational(0));
        rr[fi] = Rational(1);
        ineq.push_back(rr);
      }
      auto pt = fm_feasible(ineq, k);
      if (!pt) return;
      for (int fi = 0; fi < k; ++fi) w[free_cols[fi]] = (*pt)[fi];
      for (int r = 0; r < rank; ++r) {
        Rational val = A[r][n];
        for (int fi = 0; fi < k; ++fi) val -= A[r][free_cols[fi]] * w[free_cols[fi]];
        w[pivot_col[r]] = val;
      }
    }
    std::map<std::pair<int, int>, Rational> sol;
    for (int t = 0; t < n; ++t) {
      if (w[t] < Rational(0)) return;
      if (!w[t].is_zero()) sol[diags[t]] = w[t];
    }
    for (int v = 0; v < c; ++v) {
      Rational deg(0);
      for (int t = 0; t < n; ++t)
        if (diags[t].first == v || diags[t].second == v) deg += w[t];
      if (deg != chart.x[v]) return;
    }
    found = sol;
  };
  triangulate_range(0, c - 1, cur, check);
  return found;
}

// ---------------------------------------------------------------------------
// Compatibility (disjoint realizability)
// ---------------------------------------------------------------------------

static bool in_cyclic_interval(int idx, int lo, int hi, int c) {
  // Is idx in the cyclic interval [lo..hi]?
  if (lo <= hi) return idx >= lo && idx <= hi;
  return idx >= lo || idx <= hi;
}

// Sites enclosed by an around class, and its two end sites.
static std::vector<int> enclosed_sites(const TrimArcClass& a, int c) {
  std::vector<int> out;
  int len = (a.hi - a.lo + c) % c + 1;
  for (int k = 0; k < len; ++k) out.push_back((a.lo + k) % c);
  return out;
}
static std::pair<int, int> end_sites(const TrimArcClass& a, int c) {
  return {(a.lo + c - 1) % c, (a.hi + 1) % c};
}

bool trim_classes_compatible(int c, const TrimArcClass& a, const TrimArcClass& b) {
  if (a.radial && b.radial) return true;
  if (a.radial != b.radial) {
    const TrimArcClass& rad = a.radial ? a : b;
    const TrimArcClass& ar = a.radial ? b : a;
    // A radial from alpha_j crosses exactly the arcs enclosing alpha_j.
    return !in_cyclic_interval(rad.i, ar.lo, ar.hi, c);
  }
  // around vs around: one disk inside the other, or fully separated. The
  // end sites matter: an arc ending on an enclosed site is forced to cross.
  auto inside = [&](const TrimArcClass& inner, const TrimArcClass& outer) {
    for (int s : enclosed_sites(inner, c))
      if (!in_cyclic_interval(s, outer.lo, outer.hi, c)) return false;
    auto [e1, e2] = end_sites(inner, c);
    auto [o1, o2] = end_sites(outer, c);
    for (int e : {e1, e2})
      if (!in_cyclic_interval(e, outer.lo, outer.hi, c) && e != o1 && e != o2) return false;
    return true;
  };
  auto separated = [&] {
    auto [ae1, ae2] = end_sites(a, c);
    auto [be1, be2] = end_sites(b, c);
    for (int s : enclosed_sites(a, c)) {
      if (in_cyclic_interval(s, b.lo, b.hi, c)) return false;
      if (s == be1 || s == be2) return false;
    }
    for (int s : enclosed_sites(b, c)) {
      if (in_cyclic_interval(s, a.lo, a.hi, c)) return false;
      if (s == ae1 || s == ae2) return false;
    }
    return true;
  };
  return inside(a, b) || inside(b, a) || separated();
}

bool pants_classes_compatible(const PantsArcClass& a, const PantsArcClass& b) {
  bool a_loop = a.i == a.j, b_loop = b.i == b.j;
  if (a_loop && b_loop) return a.i == b.i;
  if (!a_loop && !b_loop) return true;
  const PantsArcClass& loop = a_loop ? a : b;
  const PantsArcClass& seam = a_loop ? b : a;
  // The loop at boundary i is disjoint exactly from arcs with an end on i.
  return seam.i == loop.i || seam.j == loop.i;
}

bool disk_chords_compatible(int c, const DiskChordClass& a, const DiskChordClass& b) {
  // Standard circular crossing test; shared endpoints do not cross.
  int x1 = a.i, y1 = a.j, x2 = b.i, y2 = b.j;
  if (x1 == x2 || x1 == y2 || y1 == x2 || y1 == y2) return true;
  auto between = [&](int p, int lo, int hi) {
    // strictly between lo and hi going cyclically lo -> hi
    int span = (hi - lo + c) % c;
    int off = (p - lo + c) % c;
    return off > 0 && off < span;
  };
  bool b1 = between(x2, x1, y1);
  bool b2 = between(y2, x1, y1);
  return b1 == b2;
}

// ---------------------------------------------------------------------------
// Reconstruction
// ---------------------------------------------------------------------------

TrimSystem reconstruct_trim(const TrimChart& chart) {
  auto member = membership_trim(chart);
  if (!member) throw std::domain_error("trim chart point outside the membership set");
  const int c = chart.c;
  TrimSystem sys;

  std::vector<int> active(c);
  for (int i = 0; i < c; ++i) active[i] = i;
  std::vector<Rational> x = chart.x;
  Rational sum(0);
  for (const auto& v : x) sum += v;

  while (true) {
    if (sum == chart.y) {
      for (int j : active)
        if (!x[j].is_zero()) sys.arcs.push_back({TrimArcClass{true, j, 0, 0}, x[j]});
      return sys;
    }
    // sum > y here; a zero entry must exist among active indices.
    int pos = -1;
    for (size_t t = 0; t < active.size(); ++t)
      if (x[active[t]].is_zero()) {
        pos = (int)t;
        break;
      }
    if (pos < 0) throw std::logic_error("trim reconstruction lost membership");
    if (active.size() == 1) {
      if (!chart.y.is_zero()) throw std::logic_error("trim reconstruction stuck");
      return sys;
    }
    int i = active[pos];
    int p = active[(pos + active.size() - 1) % active.size()];
    int n = active[(pos + 1) % active.size()];
    // The cone arc around the run of removed indices through i: its ends lie
    // on the active neighbours p and n.
    Rational cap = (p == n) ? x[p] / Rational(2)
                            : (x[p] < x[n] ? x[p] : x[n]);
    Rational u = (sum - chart.y) / Rational(2);
    if (cap < u) u = cap;
    if (!u.is_zero()) {
      TrimArcClass cls;
      cls.radial = false;
      cls.lo = (p + 1) % c;
      cls.hi = (n + c - 1) % c;
      sys.arcs.push_back({cls, u});
      if (p == n) {
        x[p] -= u * Rational(2);
      } else {
        x[p] -= u;
        x[n] -= u;
      }
      sum -= u * Rational(2);
    }
    active.erase(active.begin() + pos);
  }
}

PantsSystem reconstruct_pants(const PantsChart& chart) {
  PantsCell cell = membership_pants(chart);
  PantsSystem sys;
  for (const auto& [key, w] : cell.arcs)
    if (!w.is_zero()) sys.arcs.push_back({PantsArcClass{key.first, key.second}, w});
  return sys;
}

DiskSystem reconstruct_disk(const DiskChart& chart) {
  auto sol = membership_disk(chart);
  if (!sol) throw std::domain_error("disk chart point not realizable");
  DiskSystem sys;
  for (const auto& [key, w] : *sol) sys.chords.push_back({DiskChordClass{key.first, key.second}, w});
  return sys;
}

QSystem reconstruct_connector(const ConnectorChart& chart) {
  QSystem q;
  q.sense = chart.chart == 2 ? -1 : +1;
  if (chart.y.is_zero()) {
    q.cores = chart.t;
    q.arcs = Rational(0);
    q.twist = Rational(0);
  } else {
    q.cores = Rational(0);
    q.arcs = chart.y;
    q.twist = chart.t;
  }
  return q;
}

SpiralSystem reconstruct_tempty(const TEmptyChart& chart) {
  SpiralSystem s;
  s.sense = chart.s < Rational(0) ? -1 : +1;
  s.weight = chart.s.abs();
  return s;
}

TrimChart trim_parameters(int c, const TrimSystem& sys) {
  TrimChart chart;
  chart.c = c;
  chart.x.assign(c, Rational(0));
  chart.y = Rational(0);
  for (const auto& [cls, w] : sys.arcs) {
    if (cls.radial) {
      chart.x[cls.i] += w;
      chart.y += w;
    } else {
      int end1 = (cls.lo + c - 1) % c;
      int end2 = (cls.hi + 1) % c;
      chart.x[end1] += w;
      chart.x[end2] += w;
    }
  }
  return chart;
}

PantsChart pants_parameters(const PantsSystem& sys) {
  PantsChart chart;
  Rational y[3] = {Rational(0), Rational(0), Rational(0)};
  for (const auto& [cls, w] : sys.arcs) {
    if (cls.i == cls.j) {
      y[cls.i] += w * Rational(2);
    } else {
      y[cls.i] += w;
      y[cls.j] += w;
    }
  }
  chart.y1 = y[0];
  chart.y2 = y[1];
  chart.y3 = y[2];
  return chart;
}

std::vector<Rational> disk_parameters(int c, const DiskSystem& sys) {
  std::vector<Rational> x(c, Rational(0));
  for (const auto& [cls, w] : sys.chords) {
    x[cls.i] += w;
    x[cls.j] += w;
  }
  return x;
}

}  // namespace lamina
