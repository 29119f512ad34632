#include <doctest.h>

#include "clans/hecke.hpp"

using namespace clans;

namespace {

HeckeElement basis(const Permutation& w) {
  HeckeElement h;
  h.n = w.n();
  h.add(w, VLaurent::monomial(0));
  return h;
}

bool elements_equal(const HeckeElement& a, const HeckeElement& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (const auto& [code, c] : a.terms) {
    auto it = b.terms.find(code);
    if (it == b.terms.end() || !(it->second == c)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("generator action on the standard basis") {
  Permutation id = Permutation::identity(3);
  Permutation s1 = Permutation::parse("213");

  HeckeElement h = hecke_apply_gen(1, basis(id));
  CHECK(h.coeff(s1) == VLaurent::monomial(0));
  CHECK(h.terms.size() == 1);

  // T_s T_s = (q-1) T_s + q T_id
  HeckeElement h2 = hecke_apply_gen(1, h);
  CHECK(h2.coeff(id) == VLaurent::monomial(2));
  CHECK(h2.coeff(s1) == VLaurent::monomial(2) - VLaurent::monomial(0));
}

TEST_CASE("quadratic and braid relations") {
  int n = 4;
  std::vector<Permutation> all;
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  do {
    all.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));

  for (const Permutation& w : all) {
    for (int i = 1; i < n; ++i) {
      HeckeElement ts = hecke_apply_gen(i, basis(w));
      HeckeElement tss = hecke_apply_gen(i, ts);
      HeckeElement rhs;
      rhs.n = n;
      for (const auto& [code, c] : ts.terms)
        rhs.terms[code] = (VLaurent::monomial(2) - VLaurent::monomial(0)) * c;
      for (const auto& [code, c] : basis(w).terms) {
        auto& slot = rhs.terms[code];
        slot += VLaurent::monomial(2) * c;
        if (slot.is_zero()) rhs.terms.erase(code);
      }
      CHECK(elements_equal(tss, rhs));
    }
    for (int i = 1; i + 1 < n; ++i) {
      auto lhs = hecke_apply_gen(
          i, hecke_apply_gen(i + 1, hecke_apply_gen(i, basis(w))));
      auto rhs = hecke_apply_gen(
          i + 1, hecke_apply_gen(i, hecke_apply_gen(i + 1, basis(w))));
      CHECK(elements_equal(lhs, rhs));
    }
  }
}

TEST_CASE("kl polynomials, small classics") {
  KlContext ctx(4);
  Permutation id = Permutation::identity(4);
  Permutation w = Permutation::parse("4231");
  CHECK(ctx.kl_poly(w, w) == QPoly::one());
  CHECK(ctx.kl_poly(id, w) == QPoly({1, 1}));
  CHECK(ctx.kl_poly(id, Permutation::parse("3412")) == QPoly({1, 1}));
  CHECK(ctx.kl_poly(id, w0(4)) == QPoly::one());

  KlContext c2(2);
  CHECK(c2.kl_poly(Permutation::parse("21"), Permutation::parse("12")).is_zero());
}

TEST_CASE("kl degree bound and positivity, exhaustive S_5") {
  int n = 5;
  KlContext ctx(n);
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::vector<Permutation> all;
  do {
    all.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));

  for (const Permutation& w : all) {
    int lw = coxeter_length(w);
    for (const auto& [x, p] : ctx.row(w)) {
      CHECK(p.nonnegative());
      CHECK(p.coeff(0) == 1);
      CHECK(bruhat_leq(x, w));
      if (!(x == w)) CHECK(2 * p.degree() <= lw - coxeter_length(x) - 1);
    }
  }
}
