#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lamina/surface.hpp"

namespace lamina {

// A decomposition piece. Port inventory by kind: P has 3 alpha-circle ports,
// Q has 2, Tc and Tempty have 1 (their arc / delta boundary is never glued),
// Dc has none.
struct Piece {
  std::string id;
  ElementaryKind kind = ElementaryKind::Pants;
  int c = 0;  // arcs for Tc / Dc

  int num_ports() const {
    switch (kind) {
      case ElementaryKind::Pants: return 3;
      case ElementaryKind::Connector: return 2;
      case ElementaryKind::TrimAnnulus:
      case ElementaryKind::TrimAnnulusEmpty: return 1;
      default: return 0;
    }
  }
};

struct Port {
  std::string piece;
  int index = 0;
  friend bool operator==(const Port& a, const Port& b) {
    return a.piece == b.piece && a.index == b.index;
  }
  friend bool operator<(const Port& a, const Port& b) {
    return a.piece != b.piece ? a.piece < b.piece : a.index < b.index;
  }
  std::string str() const { return piece + ":" + std::to_string(index); }
};

struct Gluing {
  Port a, b;
};

struct Decomposition {
  std::vector<Piece> pieces;
  std::vector<Gluing> gluings;
  // Connectivity is an invariant only when declared by the input.
  bool declared_connected = false;

  const Piece* find(const std::string& id) const;
  // Hard structural errors (dangling ids, bad port indices, port reuse,
  // self-glued port). Distinct from invariant violations.
  std::optional<std::string> structural_error() const;

  std::vector<Port> all_ports() const;
  std::vector<Port> unglued_ports() const;
  bool is_connected() const;
  std::vector<std::vector<int>> components() const;  // piece indices per component

  int count(ElementaryKind k) const;
  int euler() const;             // chi of the assembled pair
  int alpha_circles() const;     // b: unglued alpha-circle ports
  int alpha_arcs() const;        // c: arcs over Tc and Dc pieces
  Rational assembled_chi_g() const;
};

struct ValidationReport {
  bool ok = false;
  std::vector<std::string> violations;
  int chi = 0;
  int b = 0;
  int c = 0;
  Rational chi_g;
};

// Checks every Decomposition invariant: glued ports exist and are used once,
// no connector adjacent to a Tempty, bookkeeping identity 2m + l = 3k + r - b,
// orientability (automatic here), and reports derived chi/b/c plus the
// chi_g < 0 hypothesis. Structural malformation throws std::invalid_argument.
ValidationReport validate_decomposition(const Decomposition& d);

}  // namespace lamina
