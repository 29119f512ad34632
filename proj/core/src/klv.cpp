#include "clans/klv.hpp"

#include <algorithm>
#include <stdexcept>

#include "clans/capacity_tree.hpp"
#include "clans/path_diagram.hpp"

namespace clans {

CaseKind classify_root(const Clan& c, int i) {
  if (i < 1 || i >= c.n()) throw std::invalid_argument("classify_root: bad i");
  const Symbol &a = c.at(i), &b = c.at(i + 1);
  if (a.is_sign() && b.is_sign()) {
    return a == b ? CaseKind::CompactImaginary : CaseKind::NoncompactImaginary;
  }
  if (a.is_pair() && b.is_pair()) {
    if (c.mate(i) == i + 1) return CaseKind::Real;
    return c.mate(i) < c.mate(i + 1) ? CaseKind::ComplexAscent
                                     : CaseKind::ComplexDescent;
  }
  if (a.is_pair()) {
    // number then sign: ascent iff the mate sits to the left
    return c.mate(i) < i ? CaseKind::ComplexAscent : CaseKind::ComplexDescent;
  }
  // sign then number: ascent iff the mate sits to the right
  return c.mate(i + 1) > i + 1 ? CaseKind::ComplexAscent
                               : CaseKind::ComplexDescent;
}

namespace {

Clan swapped(const Clan& c, int i) {
  std::vector<Symbol> s = c.symbols();
  std::swap(s[i - 1], s[i]);
  return Clan(std::move(s));
}

Clan with_pair_replaced(const Clan& c, int i, Symbol a, Symbol b) {
  std::vector<Symbol> s = c.symbols();
  s[i - 1] = a;
  s[i] = b;
  return Clan(std::move(s));
}

Clan with_new_pair(const Clan& c, int i) {
  std::vector<Symbol> s = c.symbols();
  int8_t fresh = 127;  // renumbered on construction
  s[i - 1] = Symbol{fresh};
  s[i] = Symbol{fresh};
  return Clan(std::move(s));
}

}  // namespace

ClanSet::ClanSet(int p, int q) : p_(p), q_(q) {
  clans_ = generate_clans(p, q);
  len_.reserve(clans_.size());
  for (size_t i = 0; i < clans_.size(); ++i) {
    len_.push_back(clan_length(clans_[i]));
    by_str_[clans_[i].str()] = static_cast<int>(i);
  }
  int gens = n() - 1;
  trans_.resize(clans_.size() * std::max(gens, 0));
  for (int idx = 0; idx < size(); ++idx) {
    const Clan& c = clans_[idx];
    for (int i = 1; i <= gens; ++i) {
      Transition t;
      t.kind = classify_root(c, i);
      switch (t.kind) {
        case CaseKind::CompactImaginary:
          break;
        case CaseKind::NoncompactImaginary:
          t.swapped = index(swapped(c, i));
          t.cayley1 = index(with_new_pair(c, i));
          break;
        case CaseKind::Real:
          t.cayley1 = index(with_pair_replaced(c, i, Symbol{Symbol::kPlus},
                                               Symbol{Symbol::kMinus}));
          t.cayley2 = index(with_pair_replaced(c, i, Symbol{Symbol::kMinus},
                                               Symbol{Symbol::kPlus}));
          break;
        case CaseKind::ComplexAscent:
        case CaseKind::ComplexDescent:
          t.swapped = index(swapped(c, i));
          break;
      }
      trans_[idx * gens + (i - 1)] = t;
    }
  }
}

int ClanSet::index(const Clan& c) const {
  auto it = by_str_.find(c.str());
  if (it == by_str_.end()) throw std::invalid_argument("ClanSet: foreign clan");
  return it->second;
}

void ModuleElement::add(int idx, const VLaurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

ModuleElement module_apply_gen(int i, const ModuleElement& m) {
  if (!m.set) throw std::invalid_argument("module_apply_gen: unbound element");
  const ClanSet& S = *m.set;
  if (i < 1 || i >= S.n())
    throw std::invalid_argument("module_apply_gen: bad generator");
  static const VLaurent q = VLaurent::monomial(2);
  static const VLaurent one = VLaurent::monomial(0);
  const VLaurent qm1 = q - one, qm2 = qm1 - one;
  ModuleElement out;
  out.set = m.set;
  for (const auto& [idx, c] : m.terms) {
    const auto& t = S.transition(idx, i);
    switch (t.kind) {
      case CaseKind::CompactImaginary:
        out.add(idx, q * c);
        break;
      case CaseKind::NoncompactImaginary:
        out.add(t.cayley1, c);
        out.add(t.swapped, c);
        break;
      case CaseKind::Real:
        out.add(idx, qm2 * c);
        out.add(t.cayley1, qm1 * c);
        out.add(t.cayley2, qm1 * c);
        break;
      case CaseKind::ComplexAscent:
        out.add(t.swapped, c);
        break;
      case CaseKind::ComplexDescent:
        out.add(t.swapped, q * c);
        out.add(idx, qm1 * c);
        break;
    }
  }
  return out;
}

const QPoly* KlvTable::entry(int tau, int delta) const {
  const auto& r = rows_[delta];
  auto it = std::lower_bound(r.begin(), r.end(), tau,
                             [](const auto& e, int t) { return e.first < t; });
  if (it == r.end() || it->first != tau) return nullptr;
  return &it->second;
}

KlvTable klv_table(int p, int q) {
  KlvTable table{ClanSet(p, q)};
  const ClanSet& S = table.set_;
  const int N = S.size();
  table.rows_.resize(N);

  // Clans are sorted by length, so each generator target is already built.
  std::vector<int> by_len_desc(N);
  for (int i = 0; i < N; ++i) by_len_desc[i] = N - 1 - i;

  for (int delta = 0; delta < N; ++delta) {
    const Clan& d = S.clan(delta);
    const int ld = S.length(delta);
    if (ld == 0) {
      table.rows_[delta] = {{delta, QPoly::one()}};
      continue;
    }

    // Generator pair: prefer a complex descent, else adjacent mates.
    int gen = 0, tau = -1;
    for (int i = 1; i < S.n() && gen == 0; ++i) {
      const auto& t = S.transition(delta, i);
      if (t.kind == CaseKind::ComplexDescent) {
        gen = i;
        tau = t.swapped;
      }
    }
    if (gen == 0) {
      for (int i = 1; i < S.n() && gen == 0; ++i) {
        if (S.transition(delta, i).kind == CaseKind::Real) {
          gen = i;
          tau = S.transition(delta, i).cayley1;  // pair -> (+,-)
        }
      }
    }
    if (gen == 0)
      throw std::logic_error("klv_table: no generator pair for " + d.str());

    // X = v^{-1} (T_s + 1) C'_tau, with C'_tau read off the finished row.
    ModuleElement mt;
    mt.set = &S;
    for (const auto& [g, poly] : table.rows_[tau])
      mt.terms.emplace(g, VLaurent::from_qpoly(poly, -S.length(tau)));
    ModuleElement X = module_apply_gen(gen, mt);
    for (const auto& [g, c] : mt.terms) X.add(g, c);
    const VLaurent vinv = VLaurent::monomial(-1);
    for (auto& [g, c] : X.terms) c *= vinv;

    // Remove the symmetric overshoot above each shorter clan, longest first.
    for (int g : by_len_desc) {
      if (g == delta) continue;
      auto it = X.terms.find(g);
      if (it == X.terms.end()) continue;
      const int lg = S.length(g);
      const VLaurent& coeff = it->second;
      if (coeff.max_exp() < -lg) continue;
      VLaurent corr;
      for (int k = 0; k + (-lg) <= coeff.max_exp(); ++k) {
        long long e = coeff.coeff(k - lg);
        if (e == 0) continue;
        corr += VLaurent::monomial(k, e);
        if (k > 0) corr += VLaurent::monomial(-k, e);
      }
      if (corr.is_zero()) continue;
      if (corr.max_exp() > 0)
        table.diagnostics_.push_back(
            {d.str(), S.clan(g).str(), corr.str()});
      for (const auto& [h, poly] : table.rows_[g]) {
        VLaurent sub = corr * VLaurent::from_qpoly(poly, -lg);
        auto ht = X.terms.find(h);
        if (ht == X.terms.end()) {
          VLaurent neg;
          neg -= sub;
          X.add(h, neg);
        } else {
          ht->second -= sub;
          if (ht->second.is_zero()) X.terms.erase(ht);
        }
      }
    }

    auto self = X.terms.find(delta);
    if (self == X.terms.end() ||
        !(self->second == VLaurent::monomial(-ld)))
      throw std::logic_error("klv_table: row head of " + d.str() +
                             " failed to normalize");

    std::vector<std::pair<int, QPoly>> row;
    row.reserve(X.terms.size());
    for (const auto& [g, c] : X.terms) {
      QPoly pq = c.to_qpoly(ld, /*require_nonneg=*/true);
      if (!pq.is_zero()) row.emplace_back(g, std::move(pq));
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    table.rows_[delta] = std::move(row);
  }
  return table;
}

QPoly klv_richardson(const Clan& tau, const Clan& gamma) {
  if (!avoids_1212(gamma))
    throw std::invalid_argument("klv_richardson: gamma has interleaved pairs");
  if (!diagram_contains(gamma, tau))
    throw std::invalid_argument("klv_richardson: tau not inside gamma");
  PathDiagram g = clan_diagram(gamma), t = clan_diagram(tau);
  QPoly bottom = count_labellings(
      build_capacity_tree(g.lower, Matching::Inner, t.lower));
  QPoly top = count_labellings(
      build_capacity_tree(g.upper, Matching::Outer, t.upper));
  return bottom * top;
}

ClosureOrder::ClosureOrder(const KlvTable& t) : set_(&t.set()) {
  int N = t.set().size();
  below_.assign(N, std::vector<bool>(N, false));
  for (int d = 0; d < N; ++d)
    for (const auto& [g, poly] : t.row(d)) below_[d][g] = true;
}

std::vector<std::pair<int, int>> ClosureOrder::covers() const {
  int N = static_cast<int>(below_.size());
  std::vector<std::pair<int, int>> out;
  for (int hi = 0; hi < N; ++hi) {
    for (int lo = 0; lo < N; ++lo) {
      if (lo == hi || !below_[hi][lo]) continue;
      bool cover = true;
      for (int mid = 0; mid < N && cover; ++mid)
        if (mid != lo && mid != hi && below_[hi][mid] && below_[mid][lo])
          cover = false;
      if (cover) out.emplace_back(lo, hi);
    }
  }
  return out;
}

}  // namespace clans
