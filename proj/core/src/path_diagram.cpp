#include "clans/path_diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace clans {

PathDiagram clan_diagram(const Clan& c) {
  std::vector<Step> up, low;
  up.reserve(c.n());
  low.reserve(c.n());
  for (int i = 1; i <= c.n(); ++i) {
    if (c.at(i).is_plus()) {
      up.push_back(Step::Up);
      low.push_back(Step::Up);
    } else if (c.at(i).is_minus()) {
      up.push_back(Step::Right);
      low.push_back(Step::Right);
    } else if (c.is_first_occurrence(i)) {
      up.push_back(Step::Up);
      low.push_back(Step::Right);
    } else {
      up.push_back(Step::Right);
      low.push_back(Step::Up);
    }
  }
  return PathDiagram{LatticePath(std::move(up)), LatticePath(std::move(low)),
                     c.p(), c.q()};
}

std::vector<std::pair<int, int>> components(const PathDiagram& d) {
  std::vector<std::pair<int, int>> out;
  int n = d.upper.size();
  int start = -1;
  for (int dgl = 1; dgl <= n; ++dgl) {
    int gap = d.upper.height(dgl) - d.lower.height(dgl);
    if (gap > 0 && start < 0) start = dgl;
    if (gap == 0 && start > 0) {
      out.emplace_back(start, dgl);
      start = -1;
    }
  }
  return out;
}

namespace {

void corners_of_path(const LatticePath& path, Boundary b, Step in, Step out,
                     std::vector<Corner>& dst) {
  int n = path.size();
  for (int i = 1; i < n; ++i) {
    if (path.step(i) != in || path.step(i + 1) != out) continue;
    Corner c;
    auto [x, y] = path.point(i);
    c.x = x;
    c.y = y;
    c.boundary = b;
    c.step = i;
    int l = 1;
    while (i - l >= 1 && path.step(i - l) == in) ++l;
    c.left_leg = l;
    int r = 1;
    while (i + 1 + r <= n && path.step(i + 1 + r) == out) ++r;
    c.right_leg = r;
    dst.push_back(c);
  }
}

}  // namespace

std::vector<Corner> all_corners(const PathDiagram& d) {
  std::vector<Corner> out;
  corners_of_path(d.lower, Boundary::Bottom, Step::Up, Step::Right, out);
  corners_of_path(d.upper, Boundary::Top, Step::Right, Step::Up, out);
  return out;
}

std::vector<Corner> singular_corners(const PathDiagram& d) {
  // Self-classification: each corner is tested against the opposite path.
  std::vector<Corner> out;
  for (const Corner& c : all_corners(d)) {
    const LatticePath& opp = c.boundary == Boundary::Bottom ? d.upper : d.lower;
    if (!opp.passes_through(c.x, c.y)) out.push_back(c);
  }
  return out;
}

std::vector<Corner> singular_corners(const PathDiagram& d,
                                     const PathDiagram& other) {
  std::vector<Corner> out;
  for (const Corner& c : all_corners(d)) {
    const LatticePath& cmp =
        c.boundary == Boundary::Bottom ? other.lower : other.upper;
    if (!cmp.passes_through(c.x, c.y)) out.push_back(c);
  }
  return out;
}

int corner_capacity(const Corner& corner, const LatticePath& other) {
  int n = other.size();
  int p = other.ups(), q = n - p;
  int dir = corner.boundary == Boundary::Bottom ? 1 : -1;
  for (int c = 0; c <= std::min(p, q); ++c) {
    int x = corner.x - dir * c, y = corner.y + dir * c;
    if (x < 0 || y < 0 || x > q || y > p) break;
    if (other.passes_through(x, y)) return c;
  }
  throw std::invalid_argument("corner_capacity: no diagonal hit (paths not nested)");
}

bool diagram_contains(const Clan& gamma, const Clan& tau) {
  if (!avoids_1212(gamma))
    throw std::invalid_argument("diagram_contains: gamma has interleaved pairs");
  if (gamma.n() != tau.n() || gamma.p() != tau.p()) return false;
  PathDiagram g = clan_diagram(gamma), t = clan_diagram(tau);
  for (int d = 0; d <= gamma.n(); ++d) {
    int lo = g.lower.height(d), hi = g.upper.height(d);
    if (t.upper.height(d) < lo || t.upper.height(d) > hi) return false;
    if (t.lower.height(d) < lo || t.lower.height(d) > hi) return false;
  }
  return true;
}

}  // namespace clans
