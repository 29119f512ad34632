#pragma once

#include <unordered_map>
#include <vector>

#include "clans/permutation.hpp"
#include "clans/poly.hpp"

namespace clans {

/// Element of the Hecke algebra of S_n over Z[v, v^{-1}], v^2 = q, as a
/// sparse combination of the standard basis indexed by packed permutations.
struct HeckeElement {
  int n = 0;
  std::unordered_map<uint64_t, VLaurent> terms;

  void add(const Permutation& w, const VLaurent& c);
  VLaurent coeff(const Permutation& w) const;
};

/// Left multiplication by the i-th standard generator:
/// T_s T_w = T_{sw} when sw > w, and (q-1) T_w + q T_{sw} otherwise.
HeckeElement hecke_apply_gen(int i, const HeckeElement& h);

/// Canonical-basis context for one S_n: computes and memoizes the rows of
/// the self-dual basis and answers kl_poly queries from them.  Not
/// thread-safe; use one context per thread or serialize access.
class KlContext {
 public:
  explicit KlContext(int n);

  /// P_{x,w}(q); zero when x is not below w.
  const QPoly& kl_poly(const Permutation& x, const Permutation& w);

  /// Full row of w: pairs (x, P_{x,w}) for x in the support.
  const std::vector<std::pair<Permutation, QPoly>>& row(const Permutation& w);

  int n() const { return n_; }

 private:
  using Row = std::unordered_map<uint64_t, QPoly>;
  const Row& ensure(const Permutation& w);

  int n_;
  std::unordered_map<uint64_t, Row> rows_;
  std::unordered_map<uint64_t, std::vector<std::pair<Permutation, QPoly>>> row_cache_;
  QPoly zero_;
};

}  // namespace clans
