#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flatcat/word.hpp"

namespace flatcat {

/// One unit step of a lattice diagram, in lattice coordinates (y up).
struct LatticeSegment {
  int x0, y0, x1, y1;
  bool highlighted = false;
  bool horizontal() const { return y0 == y1; }
  bool operator==(const LatticeSegment&) const = default;
};

/// Letter w_i becomes the horizontal step (i-1, w_i) -> (i, w_i); unit
/// vertical steps join consecutive letters.
struct LatticeDiagram {
  std::vector<LatticeSegment> segments;
  int width = 0;   // word length
  int height = 0;  // largest letter
};

enum class RenderFormat { ascii, svg };

RenderFormat parse_render_format(std::string_view name);

/// Throws DomainError unless w is a Catalan word. A highlight range marks its
/// letters and the vertical steps between them.
LatticeDiagram lattice_diagram(const Word& w, std::span<const LetterRange> highlights = {});

/// ascii: one character cell per unit, '_' horizontal and '|' vertical, with
/// '=' and '!' for highlighted steps. svg: integer coordinates, y inverted.
std::string render_lattice(const Word& w, RenderFormat format,
                           std::span<const LetterRange> highlights = {});

}  // namespace flatcat
