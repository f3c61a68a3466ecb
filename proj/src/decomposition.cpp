#include "lamina/decomposition.hpp"

#include <algorithm>
#include <set>

namespace lamina {

const Piece* Decomposition::find(const std::string& id) const {
  for (const auto& p : pieces)
    if (p.id == id) return &p;
  return nullptr;
}

std::optional<std::string> Decomposition::structural_error() const {
  std::set<std::string> ids;
  for (const auto& p : pieces) {
    if (!ids.insert(p.id).second) return "duplicate piece id '" + p.id + "'";
    if (p.kind == ElementaryKind::NonElementary) return "piece '" + p.id + "' has invalid kind";
    if (p.kind == ElementaryKind::TrimAnnulus && p.c < 1)
      return "piece '" + p.id + "' is a trim annulus with c < 1";
    if (p.kind == ElementaryKind::CuspedDisk && p.c < 3)
      return "piece '" + p.id + "' is a cusped disk with c < 3";
  }
  std::set<Port> used;
  for (const auto& g : gluings) {
    for (const Port* pt : {&g.a, &g.b}) {
      const Piece* p = find(pt->piece);
      if (!p) return "gluing references unknown piece '" + pt->piece + "'";
      if (pt->index < 0 || pt->index >= p->num_ports())
        return "gluing references bad port " + pt->str();
      if (!used.insert(*pt).second) return "port " + pt->str() + " glued more than once";
    }
    if (g.a == g.b) return "port " + g.a.str() + " glued to itself";
  }
  return std::nullopt;
}

std::vector<Port> Decomposition::all_ports() const {
  std::vector<Port> out;
  for (const auto& p : pieces)
    for (int i = 0; i < p.num_ports(); ++i) out.push_back({p.id, i});
  return out;
}

std::vector<Port> Decomposition::unglued_ports() const {
  std::set<Port> used;
  for (const auto& g : gluings) {
    used.insert(g.a);
    used.insert(g.b);
  }
  std::vector<Port> out;
  for (const auto& pt : all_ports())
    if (!used.count(pt)) out.push_back(pt);
  return out;
}

std::vector<std::vector<int>> Decomposition::components() const {
  int n = (int)pieces.size();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto idx = [&](const std::string& id) {
    for (int i = 0; i < n; ++i)
      if (pieces[i].id == id) return i;
    return -1;
  };
  for (const auto& g : gluings) {
    int a = idx(g.a.piece), b = idx(g.b.piece);
    if (a >= 0 && b >= 0) parent[root(a)] = root(b);
  }
  std::map<int, std::vector<int>> comp;
  for (int i = 0; i < n; ++i) comp[root(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [r, v] : comp) out.push_back(std::move(v));
  return out;
}

bool Decomposition::is_connected() const { return components().size() <= 1; }

int Decomposition::count(ElementaryKind k) const {
  int n = 0;
  for (const auto& p : pieces)
    if (p.kind == k) ++n;
  return n;
}

int Decomposition::euler() const {
  // Gluing along circles adds nothing; pants contribute -1, disks +1.
  int chi = 0;
  for (const auto& p : pieces) {
    switch (p.kind) {
      case ElementaryKind::Pants: chi -= 1; break;
      case ElementaryKind::CuspedDisk: chi += 1; break;
      default: break;  // annuli are chi 0
    }
  }
  return chi;
}

int Decomposition::alpha_circles() const { return (int)unglued_ports().size(); }

int Decomposition::alpha_arcs() const {
  int c = 0;
  for (const auto& p : pieces)
    if (p.kind == ElementaryKind::TrimAnnulus || p.kind == ElementaryKind::CuspedDisk) c += p.c;
  return c;
}

Rational Decomposition::assembled_chi_g() const {
  return Rational(euler()) - Rational(alpha_arcs(), 2);
}

ValidationReport validate_decomposition(const Decomposition& d) {
  if (auto err = d.structural_error()) throw std::invalid_argument(*err);

  ValidationReport rep;
  rep.chi = d.euler();
  rep.b = d.alpha_circles();
  rep.c = d.alpha_arcs();
  rep.chi_g = d.assembled_chi_g();

  if (d.pieces.empty()) rep.violations.push_back("decomposition has no pieces");

  for (const auto& g : d.gluings) {
    ElementaryKind ka = d.find(g.a.piece)->kind;
    ElementaryKind kb = d.find(g.b.piece)->kind;
    bool q_te = (ka == ElementaryKind::Connector && kb == ElementaryKind::TrimAnnulusEmpty) ||
                (kb == ElementaryKind::Connector && ka == ElementaryKind::TrimAnnulusEmpty);
    if (q_te)
      rep.violations.push_back("connector '" +
                               std::string(ka == ElementaryKind::Connector ? g.a.piece : g.b.piece) +
                               "' glued to a T_empty");
  }

  int k = d.count(ElementaryKind::Pants);
  int l = d.count(ElementaryKind::TrimAnnulusEmpty);
  int r = d.count(ElementaryKind::TrimAnnulus);
  int m = d.count(ElementaryKind::Connector);
  if (2 * m + l != 3 * k + r - rep.b) {
    rep.violations.push_back("bookkeeping identity 2m+l = 3k+r-b fails: " +
                             std::to_string(2 * m + l) + " != " + std::to_string(3 * k + r - rep.b));
  }

  if (d.declared_connected && !d.is_connected())
    rep.violations.push_back("declared connected but has " +
                             std::to_string(d.components().size()) + " components");

  if (!(rep.chi_g < Rational(0)))
    rep.violations.push_back("assembled chi_g = " + rep.chi_g.str() + " is not < 0");

  rep.ok = rep.violations.empty();
  return rep;
}

}  // namespace lamina
