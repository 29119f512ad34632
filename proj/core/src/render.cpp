#include <algorithm>
#include <sstream>

#include "clans/path_diagram.hpp"

namespace clans {

namespace {

// Rotated canvas: lattice point (x,y) sits at row 2(p+x-y), col 2(x+y);
// step characters occupy the odd-odd midpoints.
struct Canvas {
  int rows, cols;
  std::vector<std::string> grid;
  Canvas(int p, int q)
      : rows(2 * (p + q) + 1), cols(2 * (p + q) + 1),
        grid(rows, std::string(cols, ' ')) {}
  void put(int r, int c, char ch) {
    if (r >= 0 && r < rows && c >= 0 && c < cols && grid[r][c] == ' ')
      grid[r][c] = ch;
  }
  void force(int r, int c, char ch) {
    if (r >= 0 && r < rows && c >= 0 && c < cols) grid[r][c] = ch;
  }
};

void draw_path(Canvas& cv, const LatticePath& path, int p, char up, char right,
               char dot) {
  for (int i = 1; i <= path.size(); ++i) {
    auto [x0, y0] = path.point(i - 1);
    int r = 2 * (p + x0 - y0), c = 2 * (x0 + y0);
    if (path.step(i) == Step::Up)
      cv.put(r - 1, c + 1, up);
    else
      cv.put(r + 1, c + 1, right);
  }
  for (int d = 0; d <= path.size(); ++d) {
    auto [x, y] = path.point(d);
    cv.put(2 * (p + x - y), 2 * (x + y), dot);
  }
}

std::string trim_canvas(const Canvas& cv) {
  int top = cv.rows, bot = -1;
  for (int r = 0; r < cv.rows; ++r)
    if (cv.grid[r].find_first_not_of(' ') != std::string::npos) {
      top = std::min(top, r);
      bot = std::max(bot, r);
    }
  std::ostringstream os;
  for (int r = top; r <= bot; ++r) {
    std::string line = cv.grid[r];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

}  // namespace

std::string render_ascii(const PathDiagram& d,
                         const std::optional<PathDiagram>& overlay) {
  Canvas cv(d.p, d.q);
  draw_path(cv, d.upper, d.p, '/', '\\', '+');
  draw_path(cv, d.lower, d.p, '/', '\\', '+');
  if (overlay) {
    draw_path(cv, overlay->upper, d.p, '.', '.', '*');
    draw_path(cv, overlay->lower, d.p, '.', '.', '*');
  }
  auto corners = overlay ? singular_corners(d, *overlay) : singular_corners(d);
  for (const Corner& c : corners)
    cv.force(2 * (d.p + c.x - c.y), 2 * (c.x + c.y), 'o');
  return trim_canvas(cv);
}

std::string render_svg(const PathDiagram& d,
                       const std::optional<PathDiagram>& overlay) {
  const int unit = 24, margin = 20;
  int n = d.p + d.q;
  auto px = [&](int x, int y) {
    return std::pair<int, int>{margin + unit * (x + y),
                               margin + unit * (d.p + x - y)};
  };
  std::ostringstream os;
  int side = 2 * margin + 2 * unit * n;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side
     << "\" height=\"" << side << "\">\n";
  auto poly = [&](const LatticePath& path, const char* style) {
    os << "<polyline fill=\"none\" " << style << " points=\"";
    for (int dg = 0; dg <= path.size(); ++dg) {
      auto [x, y] = path.point(dg);
      auto [cx, cy] = px(x, y);
      os << cx << "," << cy << " ";
    }
    os << "\"/>\n";
  };
  poly(d.upper, "stroke=\"black\" stroke-width=\"2\"");
  poly(d.lower, "stroke=\"black\" stroke-width=\"2\"");
  if (overlay) {
    poly(overlay->upper, "stroke=\"gray\" stroke-dasharray=\"4\"");
    poly(overlay->lower, "stroke=\"gray\" stroke-dasharray=\"4\"");
  }
  auto corners = overlay ? singular_corners(d, *overlay) : singular_corners(d);
  for (const Corner& c : corners) {
    auto [cx, cy] = px(c.x, c.y);
    os << "<circle cx=\"" << cx << "\" cy=\"" << cy
       << "\" r=\"5\" fill=\"white\" stroke=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace clans
