#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clans/permutation.hpp"

namespace clans {

/// Symbol of a clan: '+', '-', or one of a matched pair of labels.
struct Symbol {
  static constexpr int8_t kPlus = -1;
  static constexpr int8_t kMinus = -2;
  int8_t v;  // kPlus, kMinus, or pair id >= 1

  bool is_plus() const { return v == kPlus; }
  bool is_minus() const { return v == kMinus; }
  bool is_sign() const { return v < 0; }
  bool is_pair() const { return v >= 1; }
  auto operator<=>(const Symbol&) const = default;
};

/// A (p,q)-clan: string of +, -, and matched pair labels where every label
/// occurs exactly twice and (#+) - (#-) = p - q.  Pair ids are renumbered to
/// first-occurrence order on construction, so equality is structural.
class Clan {
 public:
  Clan() = default;
  explicit Clan(std::vector<Symbol> symbols);  // normalizes labels

  /// Accepts the contiguous single-character form ("1+-1", digits 1-9) and
  /// the comma-separated form ("5,7,5,7", arbitrary integer labels).  Tokens
  /// of a comma-separated string that are not single symbols are themselves
  /// read contiguously, so "1+-2,2+-1" is the 8-symbol clan.
  static Clan parse(const std::string& text);

  int n() const { return static_cast<int>(sym_.size()); }
  int p() const { return p_; }
  int q() const { return n() - p_; }
  int pairs() const { return npairs_; }
  const Symbol& at(int i) const { return sym_[i - 1]; }  // 1-based
  const std::vector<Symbol>& symbols() const { return sym_; }

  /// Position (1-based) of the other endpoint of the pair at i; 0 for signs.
  int mate(int i) const { return mate_[i - 1]; }
  bool is_first_occurrence(int i) const { return at(i).is_pair() && mate(i) > i; }
  bool is_second_occurrence(int i) const { return at(i).is_pair() && mate(i) < i; }

  /// Contiguous form when all pair ids are single digits, comma-separated
  /// otherwise; parse(canonical_string()) reproduces the clan.
  std::string str() const;

  bool operator==(const Clan& o) const { return sym_ == o.sym_; }
  auto operator<=>(const Clan& o) const { return sym_ <=> o.sym_; }

 private:
  std::vector<Symbol> sym_;
  std::vector<int> mate_;
  int p_ = 0;
  int npairs_ = 0;
};

std::string canonical_string(const Clan& c);
Clan parse_clan(const std::string& text);

/// All (p,q)-clans, canonical and duplicate-free, sorted by (length, string).
std::vector<Clan> generate_clans(int p, int q);
/// Closed-form census: sum_k C(n,2k)(2k-1)!! C(n-2k, p-k).
long long clan_count(int p, int q);

/// l(c) = sum over pairs (i<j) of (j - i - #{pairs (s,t): s < i < t < j}).
int clan_length(const Clan& c);

/// True iff some subsequence of c's positions reads as a clan equivalent to
/// pat: signs literal, pair structure up to relabeling, both mates selected.
bool contains_pattern(const Clan& c, const Clan& pat);
/// No two pairs interleave; equivalent to !contains_pattern(c, (1,2,1,2)).
bool avoids_1212(const Clan& c);

/// Swap + and -, keeping pairs.
Clan negative(const Clan& c);

enum class FsEntry : uint8_t { Plus, Minus, F, S };

/// Clan with first/second occurrences anonymized to F/S.
struct FsPattern {
  std::vector<FsEntry> entries;
  std::string str() const;
  bool operator==(const FsPattern&) const = default;
};

FsPattern fs_pattern(const Clan& c);
/// The unique interleaving-free clan with the given FS-pattern: each S mates
/// the most recent unmated F.  Throws on unbalanced or prefix-violating input.
Clan clan_from_fs(const FsPattern& f);
FsPattern parse_fs(const std::string& text);

/// Grassmannian permutation listing ascending positions of +/first
/// occurrences, then of -/second occurrences.
Permutation v_perm(const Clan& c);
/// Same with +/second occurrences first, then -/first occurrences.
Permutation u_perm(const Clan& c);
/// One-line of v_perm(c)^{-1} with the entries at each pair's two positions
/// interchanged.
Permutation yamamoto_u(const Clan& c);

}  // namespace clans
