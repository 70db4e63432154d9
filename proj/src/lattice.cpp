#include "flatcat/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "flatcat/errors.hpp"

namespace flatcat {

RenderFormat parse_render_format(std::string_view name) {
  if (name == "ascii") return RenderFormat::ascii;
  if (name == "svg") return RenderFormat::svg;
  throw UsageError("unknown render format '" + std::string(name) + "' (expected ascii or svg)");
}

namespace {

bool covered(std::span<const LetterRange> ranges, std::size_t first, std::size_t last) {
  return std::any_of(ranges.begin(), ranges.end(), [&](const LetterRange& r) {
    return r.first <= first && last <= r.last;
  });
}

}  // namespace

LatticeDiagram lattice_diagram(const Word& w, std::span<const LetterRange> highlights) {
  if (w.empty() || !validate_catalan(w.letters()))
    throw DomainError("lattice_diagram: expected a Catalan word");
  LatticeDiagram d;
  d.width = static_cast<int>(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int x = static_cast<int>(i);
    if (i > 0 && w[i] != w[i - 1]) {
      const bool mark = covered(highlights, i - 1, i);
      const int step = w[i] > w[i - 1] ? 1 : -1;
      for (int y = w[i - 1]; y != w[i]; y += step)
        d.segments.push_back({x, y, x, y + step, mark});
    }
    d.segments.push_back({x, w[i], x + 1, w[i], covered(highlights, i, i)});
    d.height = std::max(d.height, w[i]);
  }
  return d;
}

namespace {

std::string render_ascii(const Word& w, const LatticeDiagram& d) {
  // Columns alternate between letters and (when the height changes) a
  // vertical-step column; row h holds the band [h, h + 1).
  const int rows = d.height + 1;
  std::vector<std::string> grid(static_cast<std::size_t>(rows));
  auto put = [&](int band, std::size_t col, char ch) {
    auto& row = grid[static_cast<std::size_t>(band)];
    if (row.size() <= col) row.resize(col + 1, ' ');
    row[col] = ch;
  };
  std::size_t col = 0;
  for (const LatticeSegment& s : d.segments) {
    if (s.horizontal()) {
      put(s.y0, col++, s.highlighted ? '=' : '_');
      continue;
    }
    put(std::min(s.y0, s.y1), col, s.highlighted ? '!' : '|');
    // Advance past the vertical column once this run of unit steps is done.
    const std::size_t letter = static_cast<std::size_t>(s.x0);
    if (s.y1 == w[letter]) ++col;
  }
  std::string out;
  for (int band = rows - 1; band >= 0; --band) {
    std::string row = grid[static_cast<std::size_t>(band)];
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row;
    out += '\n';
  }
  return out;
}

std::string render_svg(const LatticeDiagram& d) {
  const int scale = 20;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"-1 -1 "
     << d.width + 2 << ' ' << d.height + 2 << "\" width=\"" << (d.width + 2) * scale
     << "\" height=\"" << (d.height + 2) * scale << "\">\n"
     << "<g stroke-linecap=\"round\" stroke-width=\"0.1\">\n";
  for (const LatticeSegment& s : d.segments) {
    os << "<line x1=\"" << s.x0 << "\" y1=\"" << d.height - s.y0 << "\" x2=\"" << s.x1
       << "\" y2=\"" << d.height - s.y1 << "\" stroke=\""
       << (s.highlighted ? "red" : "black") << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace

std::string render_lattice(const Word& w, RenderFormat format,
                           std::span<const LetterRange> highlights) {
  const LatticeDiagram d = lattice_diagram(w, highlights);
  return format == RenderFormat::ascii ? render_ascii(w, d) : render_svg(d);
}

}  // namespace flatcat
