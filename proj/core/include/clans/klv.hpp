#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "clans/clan.hpp"
#include "clans/poly.hpp"

namespace clans {

enum class CaseKind : uint8_t {
  CompactImaginary,
  NoncompactImaginary,
  Real,
  ComplexAscent,
  ComplexDescent,
};

/// Root type of the i-th generator at a clan: equal adjacent signs are
/// compact imaginary, opposite signs noncompact imaginary, adjacent mates
/// real; the remaining cases split by the mate positions.
CaseKind classify_root(const Clan& c, int i);

/// Indexed universe of all (p,q)-clans with the transition data the module
/// action needs precomputed.
class ClanSet {
 public:
  ClanSet(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int n() const { return p_ + q_; }
  int size() const { return static_cast<int>(clans_.size()); }
  const Clan& clan(int idx) const { return clans_[idx]; }
  int length(int idx) const { return len_[idx]; }
  int index(const Clan& c) const;

  struct Transition {
    CaseKind kind;
    int swapped = -1;   // index of c x s_i
    int cayley1 = -1;   // noncompact: new pair; real: pair -> (+,-)
    int cayley2 = -1;   // real: pair -> (-,+)
  };
  const Transition& transition(int idx, int i) const {
    return trans_[idx * (n() - 1) + (i - 1)];
  }

 private:
  int p_, q_;
  std::vector<Clan> clans_;
  std::vector<int> len_;
  std::map<std::string, int> by_str_;
  std::vector<Transition> trans_;
};

/// Sparse module element over the standard clan basis, coefficients in
/// Z[v, v^{-1}].
struct ModuleElement {
  const ClanSet* set = nullptr;
  std::unordered_map<int, VLaurent> terms;

  void add(int idx, const VLaurent& c);
};

/// Left action of the i-th Hecke generator via the five case rules.
ModuleElement module_apply_gen(int i, const ModuleElement& m);

/// One anomaly record: a correction that was not a plain constant.
struct KlvDiagnostic {
  std::string delta, gamma;
  std::string correction;
};

/// Rows of the self-dual module basis: for each clan delta the polynomials
/// P_{tau,delta} over its support.
class KlvTable {
 public:
  const ClanSet& set() const { return set_; }
  const std::vector<std::pair<int, QPoly>>& row(int delta) const {
    return rows_[delta];
  }
  const QPoly* entry(int tau, int delta) const;
  bool leq(int tau, int delta) const { return entry(tau, delta) != nullptr; }
  const std::vector<KlvDiagnostic>& diagnostics() const { return diagnostics_; }

  friend KlvTable klv_table(int p, int q);

 private:
  explicit KlvTable(ClanSet s) : set_(std::move(s)) {}
  ClanSet set_;
  std::vector<std::vector<std::pair<int, QPoly>>> rows_;  // sorted by index
  std::vector<KlvDiagnostic> diagnostics_;
};

/// Full table for (p,q) by the length recursion: each row is produced from a
/// generator pair (complex descent, or an adjacent mate pair opened to +-)
/// and cleaned by the unique symmetric corrections the degree bound forces.
KlvTable klv_table(int p, int q);

/// P_{tau,gamma} as the product of the labelling polynomials of the two
/// capacity trees of gamma's diagram relative to tau's.  gamma must avoid
/// interleaved pairs and tau must lie in its closure.
QPoly klv_richardson(const Clan& tau, const Clan& gamma);

/// Closure order extracted from the table supports.
class ClosureOrder {
 public:
  explicit ClosureOrder(const KlvTable& t);
  bool leq(int tau, int delta) const { return below_[delta][tau]; }
  std::vector<std::pair<int, int>> covers() const;  // (lower, upper)
  const ClanSet& set() const { return *set_; }

 private:
  const ClanSet* set_;
  std::vector<std::vector<bool>> below_;
};

}  // namespace clans
