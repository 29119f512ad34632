#include <doctest.h>

#include <set>

#include "clans/clan.hpp"

using namespace clans;

TEST_CASE("parse and canonical form") {
  Clan c = Clan::parse("1+-1");
  CHECK(c.p() == 2);
  CHECK(c.q() == 2);
  CHECK(c.str() == "1+-1");

  CHECK(Clan::parse("5,7,5,7").str() == "1212");
  CHECK(Clan::parse("2121").str() == "1212");  // relabeled by first occurrence
  CHECK(Clan::parse("1+-2,2+-1").str() == "1+-22+-1");
  CHECK(Clan::parse("+,-").str() == "+-");

  CHECK_THROWS(Clan::parse("1,2,2"));
  CHECK_THROWS(Clan::parse("121"));
  CHECK_THROWS(Clan::parse(""));
  CHECK_THROWS(Clan::parse("+*-"));
}

TEST_CASE("single sign clans are valid") {
  Clan c = Clan::parse("-");
  CHECK(c.p() == 0);
  CHECK(c.q() == 1);
}

TEST_CASE("enumeration census") {
  CHECK(generate_clans(1, 1).size() == 3);
  CHECK(generate_clans(2, 1).size() == 6);
  CHECK(generate_clans(2, 2).size() == 21);
  for (int p = 0; p <= 5; ++p)
    for (int q = 0; q <= 5 - p; ++q) {
      if (p + q == 0) continue;
      auto all = generate_clans(p, q);
      CHECK(static_cast<long long>(all.size()) == clan_count(p, q));
      std::set<std::string> uniq;
      for (const Clan& c : all) uniq.insert(c.str());
      CHECK(uniq.size() == all.size());
    }
}

TEST_CASE("clan length") {
  CHECK(clan_length(Clan::parse("+-")) == 0);
  CHECK(clan_length(Clan::parse("1122")) == 2);
  CHECK(clan_length(Clan::parse("1212")) == 3);
  CHECK(clan_length(Clan::parse("1221")) == 4);
  for (const Clan& c : generate_clans(2, 2))
    CHECK((clan_length(c) == 0) == (c.pairs() == 0));
}

TEST_CASE("pattern containment") {
  CHECK_FALSE(contains_pattern(Clan::parse("112233"), Clan::parse("1212")));
  CHECK(contains_pattern(Clan::parse("121323"), Clan::parse("1212")));
  Clan c = Clan::parse("1+2-21");
  CHECK(contains_pattern(c, c));
  CHECK(contains_pattern(c, Clan::parse("1221")));
  CHECK(contains_pattern(c, Clan::parse("+-")));
  CHECK_FALSE(contains_pattern(c, Clan::parse("-+")));

  // Sign counting: a pair endpoint never doubles as a sign.
  CHECK_FALSE(contains_pattern(Clan::parse("11"), Clan::parse("+-")));

  // Monotone: if c contains d and d contains pat, then c contains pat.
  std::vector<Clan> pats = {Clan::parse("1+-1"), Clan::parse("1212"),
                            Clan::parse("11")};
  for (const Clan& big : generate_clans(2, 2)) {
    for (const Clan& small : generate_clans(1, 1)) {
      if (!contains_pattern(big, small)) continue;
      for (const Clan& pat : pats)
        if (contains_pattern(small, pat)) CHECK(contains_pattern(big, pat));
    }
  }
}

TEST_CASE("avoids interleaving") {
  CHECK(avoids_1212(Clan::parse("1221")));
  CHECK_FALSE(avoids_1212(Clan::parse("1212")));
  CHECK_FALSE(avoids_1212(Clan::parse("12+-12")));
  for (const Clan& c : generate_clans(3, 2))
    CHECK(avoids_1212(c) == !contains_pattern(c, Clan::parse("1212")));
}

TEST_CASE("negative") {
  CHECK(negative(Clan::parse("1+-1")) == Clan::parse("1-+1"));
  CHECK(negative(Clan::parse("1221")) == Clan::parse("1221"));
  Clan e = Clan::parse("1+221");
  CHECK(negative(negative(e)) == e);
  CHECK(negative(e) == Clan::parse("1-221"));
}

TEST_CASE("fs patterns") {
  CHECK(fs_pattern(Clan::parse("1221")).str() == "FFSS");
  CHECK(fs_pattern(Clan::parse("1212")).str() == "FFSS");
  CHECK(fs_pattern(Clan::parse("+-")).str() == "+-");
  CHECK(clan_from_fs(parse_fs("FFSS")) == Clan::parse("1221"));
  CHECK(clan_from_fs(parse_fs("+-")) == Clan::parse("+-"));

  Clan big = Clan::parse("11+-234,4,+-3552");
  CHECK(fs_pattern(big).str() == "FS+-FFFS+-SFSS");
  CHECK(clan_from_fs(fs_pattern(big)) == big);

  CHECK_THROWS(clan_from_fs(parse_fs("SF")));
  CHECK_THROWS(clan_from_fs(parse_fs("FFS")));

  // Round trip is the identity exactly on interleaving-free clans.
  for (const Clan& c : generate_clans(2, 2)) {
    Clan rt = clan_from_fs(fs_pattern(c));
    CHECK((rt == c) == avoids_1212(c));
    CHECK(fs_pattern(rt) == fs_pattern(c));
  }
}

TEST_CASE("associated permutations") {
  Clan a = Clan::parse("12+-12");
  CHECK(v_perm(a) == Permutation::parse("123456"));
  CHECK(u_perm(a) == Permutation::parse("356124"));
  CHECK(yamamoto_u(a) == Permutation::parse("563412"));

  Clan b = Clan::parse("122331");
  CHECK(v_perm(b) == Permutation::parse("124356"));
  CHECK(u_perm(b) == Permutation::parse("356124"));
  CHECK(yamamoto_u(b) == Permutation::parse("642531"));

  Clan s = Clan::parse("++--");
  CHECK(v_perm(s) == Permutation::parse("1234"));
  CHECK(u_perm(s) == Permutation::parse("1234"));
  CHECK(yamamoto_u(s) == Permutation::parse("1234"));

  // Only possible descent is at p; exhaustive at small sizes.
  for (const Clan& c : generate_clans(2, 3)) {
    CHECK(is_grassmannian(v_perm(c), c.p()));
    CHECK(is_grassmannian(u_perm(c), c.p()));
  }
}
