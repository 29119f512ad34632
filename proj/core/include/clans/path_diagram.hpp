#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clans/clan.hpp"
#include "clans/permutation.hpp"

namespace clans {

/// Two monotone lattice paths in a p x q rectangle, the upper weakly
/// northwest of the lower.  Unrotated integer coordinates; the 45-degree
/// rotation exists only in the renderer.
struct PathDiagram {
  LatticePath upper;
  LatticePath lower;
  int p = 0;
  int q = 0;
};

/// + : both paths Up; - : both Right; first occurrence: upper Up / lower
/// Right; second occurrence: upper Right / lower Up.
PathDiagram clan_diagram(const Clan& c);

enum class Boundary : uint8_t { Top, Bottom };

/// Turning point of one path of a diagram: Bottom = Up->Right turn of the
/// lower path, Top = Right->Up turn of the upper path.  Legs are the lengths
/// of the maximal straight runs into and out of the turn.
struct Corner {
  int x = 0, y = 0;          // lattice point (rights, ups)
  Boundary boundary = Boundary::Bottom;
  int left_leg = 0;          // incoming run
  int right_leg = 0;         // outgoing run
  int step = 0;              // 1-based index of the incoming step ending here
  bool operator==(const Corner&) const = default;
};

/// Maximal step ranges (1-based, inclusive) where the two paths bound
/// positive area; ranges where the paths coincide are excluded.
std::vector<std::pair<int, int>> components(const PathDiagram& d);

/// All Up->Right turns of the lower path and Right->Up turns of the upper
/// path, with leg lengths (no reference to any other path).
std::vector<Corner> all_corners(const PathDiagram& d);

/// Corners of d not lying on the other path of d itself.
std::vector<Corner> singular_corners(const PathDiagram& d);
/// Corners of d not lying on the corresponding path of `other`: Bottom
/// corners are tested against other.lower, Top corners against other.upper.
std::vector<Corner> singular_corners(const PathDiagram& d, const PathDiagram& other);

/// Minimal diagonal offset c >= 0 such that the point (x-c, y+c) (Bottom) or
/// (x+c, y-c) (Top) lies on `other`.  Throws when no such c exists, which
/// signals non-containment.
int corner_capacity(const Corner& corner, const LatticePath& other);

/// True iff both of tau's paths lie weakly between gamma's two paths.
/// Requires gamma to avoid interleaved pairs.
bool diagram_contains(const Clan& gamma, const Clan& tau);

/// Rotated monospace rendering; marks this diagram's singular corners with
/// 'o'.  With an overlay, the overlay's paths are drawn with '.' and corners
/// are marked relative to the overlay.
std::string render_ascii(const PathDiagram& d,
                         const std::optional<PathDiagram>& overlay = std::nullopt);
std::string render_svg(const PathDiagram& d,
                       const std::optional<PathDiagram>& overlay = std::nullopt);

}  // namespace clans
