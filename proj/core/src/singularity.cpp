#include "clans/singularity.hpp"

#include <algorithm>
#include <stdexcept>

namespace clans {

namespace {

std::vector<Clan> parse_all(std::initializer_list<const char*> texts) {
  std::vector<Clan> out;
  for (const char* t : texts) out.push_back(Clan::parse(t));
  return out;
}

std::vector<Clan> with_negatives(const std::vector<Clan>& base) {
  std::vector<Clan> out = base;
  for (const Clan& c : base) {
    Clan neg = negative(c);
    if (std::find(out.begin(), out.end(), neg) == out.end()) out.push_back(neg);
  }
  return out;
}

const std::vector<Clan>& smooth_patterns() {
  static const std::vector<Clan> k = parse_all({
      "1212", "1+-1", "1-+1", "1+221", "1-221", "122+1", "122-1", "122331"});
  return k;
}

const std::vector<Clan>& lci_patterns() {
  static const std::vector<Clan> k = with_negatives(parse_all({
      "1++-1", "1+--1", "1-22+1", "1++221", "1+-221", "122--1", "122+-1",
      "12+2-1", "1+2-21", "1+23321", "12332-1", "1-22331", "12+2331",
      "122+331", "1223-31", "12233+1", "12332441", "12234431", "12233441"}));
  return k;
}

const std::vector<Clan>& lci_extra_patterns() {
  static const std::vector<Clan> k = with_negatives(parse_all({
      "1+212", "121+2", "121323", "122313", "121332", "1+23231", "12323+1",
      "12323441", "12234341", "12342341", "12343241", "12342431"}));
  return k;
}

bool contains_any(const Clan& c, const std::vector<Clan>& pats) {
  for (const Clan& p : pats)
    if (contains_pattern(c, p)) return true;
  return false;
}

bool legs_all_one(const std::vector<Corner>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const Corner& c) {
    return c.left_leg == 1 && c.right_leg == 1;
  });
}

// Diagram criterion: every singular corner has both legs 1 and each
// component carries at most one singular corner per boundary.
bool lci_by_diagram(const Clan& c) {
  PathDiagram d = clan_diagram(c);
  auto corners = singular_corners(d);
  if (!legs_all_one(corners)) return false;
  for (auto [s, e] : components(d)) {
    int bottom = 0, top = 0;
    for (const Corner& cr : corners) {
      if (cr.step < s || cr.step >= e) continue;
      (cr.boundary == Boundary::Bottom ? bottom : top)++;
    }
    if (bottom > 1 || top > 1) return false;
  }
  return true;
}

}  // namespace

bool is_smooth(const Clan& c) { return !contains_any(c, smooth_patterns()); }

TriState is_lci(const Clan& c, bool conjectural) {
  if (avoids_1212(c)) {
    bool by_pattern = !contains_any(c, lci_patterns());
    bool by_diagram = lci_by_diagram(c);
    if (by_pattern != by_diagram)
      throw std::logic_error("is_lci: pattern and diagram tests disagree on " +
                             c.str());
    return {by_pattern ? TriState::Yes : TriState::No, false};
  }
  if (!conjectural) return {TriState::Unknown, false};
  bool ok = !contains_any(c, lci_patterns()) &&
            !contains_any(c, lci_extra_patterns());
  return {ok ? TriState::Yes : TriState::No, true};
}

TriState is_gorenstein(const Clan& c) {
  if (!avoids_1212(c)) return {TriState::Unknown, false};
  for (const Corner& cr : singular_corners(clan_diagram(c)))
    if (cr.left_leg != cr.right_leg) return {TriState::No, false};
  return {TriState::Yes, false};
}

namespace {

struct RelativeCorners {
  std::vector<Corner> bottom_all, top_all;   // corners of gamma, in path order
  std::vector<bool> bottom_off, top_off;     // not on tau's matching path
};

RelativeCorners relative_corners(const PathDiagram& g, const PathDiagram& t) {
  RelativeCorners rc;
  for (const Corner& c : all_corners(g))
    (c.boundary == Boundary::Bottom ? rc.bottom_all : rc.top_all).push_back(c);
  auto mark = [](const std::vector<Corner>& cs, const LatticePath& path) {
    std::vector<bool> off(cs.size());
    for (size_t i = 0; i < cs.size(); ++i)
      off[i] = !path.passes_through(cs[i].x, cs[i].y);
    return off;
  };
  rc.bottom_off = mark(rc.bottom_all, t.lower);
  rc.top_off = mark(rc.top_all, t.upper);
  return rc;
}

bool any_off(const RelativeCorners& rc) {
  return std::any_of(rc.bottom_off.begin(), rc.bottom_off.end(),
                     [](bool b) { return b; }) ||
         std::any_of(rc.top_off.begin(), rc.top_off.end(),
                     [](bool b) { return b; });
}

bool lci_at(const RelativeCorners& rc) {
  auto side = [](const std::vector<Corner>& cs, const std::vector<bool>& off) {
    for (size_t i = 0; i < cs.size(); ++i) {
      if (!off[i]) continue;
      if (cs[i].left_leg != 1 || cs[i].right_leg != 1) return false;
      if (i + 1 < cs.size() && off[i + 1]) return false;  // consecutive turns
    }
    return true;
  };
  return side(rc.bottom_all, rc.bottom_off) && side(rc.top_all, rc.top_off);
}

bool gorenstein_at(const RelativeCorners& rc) {
  auto side = [](const std::vector<Corner>& cs, const std::vector<bool>& off) {
    for (size_t i = 0; i < cs.size(); ++i)
      if (off[i] && cs[i].left_leg != cs[i].right_leg) return false;
    return true;
  };
  return side(rc.bottom_all, rc.bottom_off) && side(rc.top_all, rc.top_off);
}

}  // namespace

LocalProfile local_profile(const Clan& gamma, const Clan& tau) {
  if (!diagram_contains(gamma, tau))
    throw std::invalid_argument("local_profile: tau not inside gamma");
  PathDiagram g = clan_diagram(gamma), t = clan_diagram(tau);
  RelativeCorners rc = relative_corners(g, t);
  LocalProfile out;
  out.smooth = !any_off(rc);
  out.lci = lci_at(rc);
  out.gorenstein = gorenstein_at(rc);
  return out;
}

namespace {

// Largest sub-diagram path avoiding the given corners: for a Bottom corner
// the lower path is raised minimally past it, for Top the upper is pushed
// down.  Heights by diagonal make the pointwise max/min a valid path.
Clan hook_removed(const PathDiagram& d, const std::vector<Corner>& corners) {
  std::vector<int> lo = d.lower.heights(), hi = d.upper.heights();
  int n = d.lower.size();
  for (const Corner& c : corners) {
    int diag = c.x + c.y;
    if (c.boundary == Boundary::Bottom) {
      for (int dd = 0; dd <= n; ++dd) {
        int bound = dd < diag ? c.y + 1 - (diag - dd) : c.y + 1;
        lo[dd] = std::max(lo[dd], bound);
      }
    } else {
      for (int dd = 0; dd <= n; ++dd) {
        int bound = dd > diag ? c.y - 1 + (dd - diag) : c.y - 1;
        hi[dd] = std::min(hi[dd], bound);
      }
    }
  }
  LatticePath nl = path_from_heights(lo), nh = path_from_heights(hi);
  FsPattern f;
  for (int i = 1; i <= n; ++i) {
    bool uu = nh.step(i) == Step::Up, lu = nl.step(i) == Step::Up;
    if (uu && lu) f.entries.push_back(FsEntry::Plus);
    else if (!uu && !lu) f.entries.push_back(FsEntry::Minus);
    else if (uu) f.entries.push_back(FsEntry::F);
    else f.entries.push_back(FsEntry::S);
  }
  return clan_from_fs(f);
}

std::vector<Clan> finalize_components(std::vector<Clan> cands) {
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  std::vector<Clan> out;
  for (const Clan& a : cands) {
    bool maximal = true;
    for (const Clan& b : cands)
      if (!(a == b) && diagram_contains(b, a)) maximal = false;
    if (maximal) out.push_back(a);
  }
  return out;
}

void require_avoiding(const Clan& gamma) {
  if (!avoids_1212(gamma))
    throw std::invalid_argument("locus: input has interleaved pairs");
}

}  // namespace

std::vector<Clan> singular_locus(const Clan& gamma) {
  require_avoiding(gamma);
  PathDiagram d = clan_diagram(gamma);
  std::vector<Clan> cands;
  for (const Corner& c : singular_corners(d)) cands.push_back(hook_removed(d, {c}));
  return finalize_components(std::move(cands));
}

std::vector<Clan> non_lci_locus(const Clan& gamma) {
  require_avoiding(gamma);
  PathDiagram d = clan_diagram(gamma);
  auto corners = singular_corners(d);
  std::vector<Clan> cands;
  for (const Corner& c : corners)
    if (c.left_leg != 1 || c.right_leg != 1) cands.push_back(hook_removed(d, {c}));
  // Adjacent same-boundary corners with unit legs are removed together.
  for (size_t i = 0; i < corners.size(); ++i) {
    for (size_t j = i + 1; j < corners.size(); ++j) {
      const Corner &a = corners[i], &b = corners[j];
      if (a.boundary != b.boundary) continue;
      if (a.left_leg != 1 || a.right_leg != 1) continue;
      if (b.left_leg != 1 || b.right_leg != 1) continue;
      if (std::abs(a.x - b.x) != 1 || std::abs(a.y - b.y) != 1) continue;
      cands.push_back(hook_removed(d, {a, b}));
    }
  }
  return finalize_components(std::move(cands));
}

std::vector<Clan> non_gorenstein_locus(const Clan& gamma) {
  require_avoiding(gamma);
  PathDiagram d = clan_diagram(gamma);
  std::vector<Clan> cands;
  for (const Corner& c : singular_corners(d))
    if (c.left_leg != c.right_leg) cands.push_back(hook_removed(d, {c}));
  return finalize_components(std::move(cands));
}

}  // namespace clans
