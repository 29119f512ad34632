#include <doctest.h>

#include <vector>

#include "clans/capacity_tree.hpp"
#include "clans/hecke.hpp"

using namespace clans;

namespace {

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::vector<Permutation> all;
  do {
    all.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return all;
}

}  // namespace

TEST_CASE("chain-plus-branch example") {
  Permutation w = Permutation::parse("986517432");
  Permutation x = Permutation::parse("764219853");
  CHECK(is_cograssmannian(w));
  CHECK(ls_kl(x, w) == QPoly({1, 1, 1}));

  // Tree shape: two leaves with capacities {0, 1}.
  LatticePath pw = lattice_path(w, 5), px = lattice_path(x, 5);
  CHECK(pw.word() == "()))(()((");
  CapacityTree t = build_capacity_tree(pw, Matching::Inner, px);
  auto leaves = t.leaves();
  REQUIRE(leaves.size() == 2);
  std::vector<long long> caps = {t.nodes[leaves[0]].capacity,
                                 t.nodes[leaves[1]].capacity};
  std::sort(caps.begin(), caps.end());
  CHECK(caps == std::vector<long long>{0, 1});
}

TEST_CASE("outer-matched example") {
  LatticePath pv = lattice_path(Permutation::parse("124673589"), 5);
  LatticePath pw = lattice_path(Permutation::parse("156892347"), 5);
  CapacityTree t = build_capacity_tree(pv, Matching::Outer, pw);
  auto leaves = t.leaves();
  REQUIRE(leaves.size() == 2);
  CHECK(t.nodes[leaves[0]].capacity == 1);
  CHECK(t.nodes[leaves[1]].capacity == 1);
  CHECK(count_labellings(t) == QPoly({1, 2, 3, 2, 1, 1}));

  // Same value through the ordinary matching on the flipped pair.
  CHECK(ls_kl(Permutation::parse("954218763"),
              Permutation::parse("986437521")) == QPoly({1, 2, 3, 2, 1, 1}));
}

TEST_CASE("trivial trees") {
  // All capacities zero: only the zero labelling.
  LatticePath pw = lattice_path(Permutation::parse("4231"), 2);
  CapacityTree t =
      build_capacity_tree(pw, Matching::Inner, pw);
  CHECK(count_labellings(t) == QPoly::one());

  CHECK(ls_kl(Permutation::identity(4), Permutation::parse("4231")) ==
        QPoly({1, 1}));
  CHECK(ls_kl(Permutation::parse("4231"), Permutation::parse("4231")) ==
        QPoly::one());
  CHECK_THROWS(ls_kl(Permutation::identity(4), Permutation::parse("3412")));
  CHECK_THROWS(ls_kl(Permutation::parse("4321"), Permutation::parse("4231")));
}

TEST_CASE("coset invariance in x") {
  Permutation w = Permutation::parse("642531");
  REQUIRE(is_cograssmannian(w));
  Permutation x = Permutation::parse("123456");
  Permutation xk = compose(x, w0K(3, 3));
  CHECK(ls_kl(x, w) == ls_kl(xk, w));
}

TEST_CASE("agrees with the recursion, exhaustive S_4 and S_5") {
  for (int n : {4, 5}) {
    KlContext ctx(n);
    auto all = symmetric_group(n);
    for (const Permutation& w : all) {
      if (!is_cograssmannian(w)) continue;
      for (const Permutation& x : all) {
        if (!bruhat_leq(x, w)) continue;
        QPoly tree = ls_kl(x, w);
        QPoly oracle = ctx.kl_poly(x, w);
        if (!(tree == oracle)) {
          CAPTURE(w.str());
          CAPTURE(x.str());
          CAPTURE(tree.str());
          CAPTURE(oracle.str());
          CHECK(tree == oracle);
          return;
        }
      }
    }
  }
}
