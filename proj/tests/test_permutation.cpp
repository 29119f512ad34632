#include <doctest.h>

#include "clans/permutation.hpp"

using namespace clans;

TEST_CASE("lengths, inverse, compose") {
  CHECK(coxeter_length(Permutation::parse("4321")) == 6);
  CHECK(Permutation::parse("2314").inverse() == Permutation::parse("3124"));
  Permutation w = Permutation::parse("35124");
  CHECK(compose(w, w.inverse()) == Permutation::identity(5));
  CHECK(coxeter_length(compose(w0(5), w)) == 10 - coxeter_length(w));
}

TEST_CASE("long elements") {
  CHECK(w0(4) == Permutation::parse("4321"));
  CHECK(w0K(2, 2) == Permutation::parse("2143"));
  CHECK(w0K(3, 0) == Permutation::parse("321"));
  CHECK(coxeter_length(w0K(3, 4)) == 3 + 6);
}

TEST_CASE("grassmannian and cograssmannian") {
  CHECK(is_grassmannian(Permutation::parse("1367245"), 4));
  CHECK_FALSE(is_grassmannian(Permutation::parse("1367245"), 3));
  CHECK(is_grassmannian(Permutation::identity(5), 2));
  CHECK(is_cograssmannian(Permutation::parse("4231")));
  CHECK(is_cograssmannian(Permutation::parse("4321")));
  CHECK_FALSE(is_cograssmannian(Permutation::parse("1234")));
  CHECK(cograssmannian_ascent(Permutation::parse("4231")) == 2);
}

TEST_CASE("bruhat order") {
  CHECK(bruhat_leq(Permutation::parse("124673589"),
                   Permutation::parse("156892347")));
  Permutation w = Permutation::parse("2431");
  CHECK(bruhat_leq(w, w));
  CHECK_FALSE(bruhat_leq(Permutation::parse("21"), Permutation::parse("12")));
  CHECK(bruhat_leq(Permutation::parse("12"), Permutation::parse("21")));
}

TEST_CASE("lattice paths") {
  // Up at steps 1,3,6,7: U R U R R U U.
  LatticePath path = lattice_path(Permutation::parse("1367245"), 4);
  CHECK(path.word() == "()())((");
  CHECK(path.ups() == 4);
  CHECK(path.point(3) == std::pair<int, int>{1, 2});
  CHECK(path.passes_through(1, 2));
  CHECK_FALSE(path.passes_through(2, 1));

  LatticePath id = lattice_path(Permutation::identity(5), 2);
  CHECK(id.word() == "(()))");

  // The path only depends on the coset modulo the block subgroup.
  Permutation w = Permutation::parse("361245");
  Permutation k = compose(w, w0K(3, 3));
  CHECK(lattice_path(w, 3) == lattice_path(k, 3));

  CHECK(path_from_heights({0, 1, 1, 2}).word() == "()(");
  CHECK(path.reversed().word() == "(())()(");
}
