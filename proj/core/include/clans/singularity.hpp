#pragma once

#include <vector>

#include "clans/clan.hpp"
#include "clans/path_diagram.hpp"

namespace clans {

/// Three-valued verdict; `conjectural` marks answers obtained from the
/// finite pattern list that covers interleaved clans only up to p+q = 8.
struct TriState {
  enum Value : uint8_t { Yes, No, Unknown } status = Unknown;
  bool conjectural = false;

  bool yes() const { return status == Yes; }
  bool operator==(const TriState&) const = default;
};

/// Pattern-avoidance smoothness test (valid for every clan).  For clans
/// without interleaved pairs this coincides with having no singular corner.
bool is_smooth(const Clan& c);

/// Local complete intersection.  Without interleaved pairs the verdict is
/// exact (pattern list and diagram criterion, which must agree).  With them
/// it is Unknown unless `conjectural`, which consults the extended pattern
/// list and flags the result.
TriState is_lci(const Clan& c, bool conjectural = false);

/// Gorenstein: equal leg lengths at every singular corner.  Unknown for
/// clans with interleaved pairs (no combinatorial criterion is known).
TriState is_gorenstein(const Clan& c);

struct LocalProfile {
  bool smooth = false;
  bool lci = false;
  bool gorenstein = false;
  bool operator==(const LocalProfile&) const = default;
};

/// Pointwise profile of gamma's closure along the orbit of tau; tau must lie
/// inside gamma's diagram band.
LocalProfile local_profile(const Clan& gamma, const Clan& tau);

/// Irreducible components of the singular / non-lci / non-Gorenstein locus,
/// one clan per component, pairwise incomparable.  gamma must avoid
/// interleaved pairs.
std::vector<Clan> singular_locus(const Clan& gamma);
std::vector<Clan> non_lci_locus(const Clan& gamma);
std::vector<Clan> non_gorenstein_locus(const Clan& gamma);

}  // namespace clans
