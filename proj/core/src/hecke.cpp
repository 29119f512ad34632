#include "clans/hecke.hpp"

#include <algorithm>
#include <stdexcept>

namespace clans {

namespace {

Permutation unpack(uint64_t code, int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = static_cast<int>((code >> (4 * i)) & 0xF) + 1;
  return Permutation(std::move(v));
}

Permutation left_gen(int i, const Permutation& w) {
  // s_i * w swaps the values i, i+1.
  std::vector<int> v = w.oneline();
  for (int& x : v) {
    if (x == i) x = i + 1;
    else if (x == i + 1) x = i;
  }
  return Permutation(std::move(v));
}

Permutation right_gen(const Permutation& w, int i) {
  // w * s_i swaps positions i, i+1.
  std::vector<int> v = w.oneline();
  std::swap(v[i - 1], v[i]);
  return Permutation(std::move(v));
}

}  // namespace

void HeckeElement::add(const Permutation& w, const VLaurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(w.code(), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

VLaurent HeckeElement::coeff(const Permutation& w) const {
  auto it = terms.find(w.code());
  return it == terms.end() ? VLaurent() : it->second;
}

HeckeElement hecke_apply_gen(int i, const HeckeElement& h) {
  if (i < 1 || i >= h.n) throw std::invalid_argument("hecke_apply_gen: bad generator");
  HeckeElement out;
  out.n = h.n;
  VLaurent q = VLaurent::monomial(2), qm1 = q - VLaurent::monomial(0);
  for (const auto& [code, c] : h.terms) {
    Permutation w = unpack(code, h.n);
    Permutation sw = left_gen(i, w);
    // sw > w  iff  i appears before i+1 in the one-line word of w^{-1},
    // i.e. position of value i is left of position of value i+1.
    bool ascent = false;
    for (int k = 1; k <= h.n; ++k) {
      if (w(k) == i) { ascent = true; break; }
      if (w(k) == i + 1) break;
    }
    if (ascent) {
      out.add(sw, c);
    } else {
      out.add(w, qm1 * c);
      out.add(sw, q * c);
    }
  }
  return out;
}

KlContext::KlContext(int n) : n_(n) {
  if (n < 1 || n > 15) throw std::invalid_argument("KlContext: n out of range");
}

const KlContext::Row& KlContext::ensure(const Permutation& w) {
  auto found = rows_.find(w.code());
  if (found != rows_.end()) return found->second;

  int lw = coxeter_length(w);
  if (lw == 0) {
    Row r;
    r.emplace(w.code(), QPoly::one());
    return rows_.emplace(w.code(), std::move(r)).first->second;
  }

  // Right descent s, predecessor w' = w s < w.
  int s = 0;
  for (int i = 1; i < n_; ++i)
    if (w(i) > w(i + 1)) { s = i; break; }
  Permutation wp = right_gen(w, s);
  const Row wp_row_copy = ensure(wp);  // copy: recursion may rehash rows_

  // Product of the w' row with the generator's canonical element, in v-form:
  // coefficient of x in the w' row is v^{-l(w')} P_{x,w'}(v^2).
  std::unordered_map<uint64_t, VLaurent> prod;
  VLaurent vinv = VLaurent::monomial(-1);
  VLaurent q = VLaurent::monomial(2), qm1 = q - VLaurent::monomial(0);
  for (const auto& [xcode, poly] : wp_row_copy) {
    Permutation x = unpack(xcode, n_);
    VLaurent c = VLaurent::from_qpoly(poly, -coxeter_length(wp));
    Permutation xs = right_gen(x, s);
    bool ascent = x(s) < x(s + 1);
    VLaurent t = vinv * c;
    if (ascent) {
      prod[xs.code()] += t;
      prod[xcode] += t;
    } else {
      prod[xcode] += t * q;  // (q-1)+1 from T_x T_s + T_x
      prod[xs.code()] += t * q;
    }
  }

  // Subtract mu(z, w') rows for z below w' with zs < z.
  for (const auto& [zcode, poly] : wp_row_copy) {
    Permutation z = unpack(zcode, n_);
    if (z(s) < z(s + 1)) continue;
    int lz = coxeter_length(z);
    int top = coxeter_length(wp) - lz - 1;
    if (top < 0 || top % 2 != 0) continue;
    long long mu = poly.coeff(top / 2);
    if (mu == 0) continue;
    const Row z_row_copy = ensure(z);
    for (const auto& [ycode, ypoly] : z_row_copy) {
      VLaurent yc = VLaurent::from_qpoly(ypoly, -lz);
      prod[ycode].add_scaled(yc, -mu);
    }
  }

  Row result;
  for (auto& [xcode, c] : prod) {
    if (c.is_zero()) continue;
    QPoly p = c.to_qpoly(lw, /*require_nonneg=*/true);
    if (!p.is_zero()) result.emplace(xcode, std::move(p));
  }
  return rows_.emplace(w.code(), std::move(result)).first->second;
}

const QPoly& KlContext::kl_poly(const Permutation& x, const Permutation& w) {
  if (x.n() != n_ || w.n() != n_)
    throw std::invalid_argument("kl_poly: size mismatch");
  const Row& r = ensure(w);
  auto it = r.find(x.code());
  return it == r.end() ? zero_ : it->second;
}

const std::vector<std::pair<Permutation, QPoly>>& KlContext::row(
    const Permutation& w) {
  auto hit = row_cache_.find(w.code());
  if (hit != row_cache_.end()) return hit->second;
  const Row& r = ensure(w);
  std::vector<std::pair<Permutation, QPoly>> out;
  out.reserve(r.size());
  for (const auto& [code, p] : r) out.emplace_back(unpack(code, n_), p);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return row_cache_.emplace(w.code(), std::move(out)).first->second;
}

}  // namespace clans
