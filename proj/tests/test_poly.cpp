#include <doctest.h>

#include "clans/poly.hpp"

using namespace clans;

TEST_CASE("qpoly basics") {
  QPoly zero;
  CHECK(zero.is_zero());
  CHECK(zero.str() == "0");

  QPoly p({1, 3, 3, 1});
  CHECK(p.degree() == 3);
  CHECK(p.eval_at_one() == 8);
  CHECK(p.str() == "1 + 3q + 3q^2 + q^3");

  QPoly a({1, 1}), b({0, 1});
  CHECK((a * a) == QPoly({1, 2, 1}));
  CHECK((a - b) == QPoly(1));
  CHECK((a - a).is_zero());
  CHECK(QPoly({1, 0, 0}).degree() == 0);  // trailing zeros trimmed
}

TEST_CASE("vlaurent arithmetic and bar") {
  VLaurent v = VLaurent::monomial(1);
  VLaurent vinv = VLaurent::monomial(-1);
  CHECK((v * vinv) == VLaurent::monomial(0));

  VLaurent x = VLaurent::from_qpoly(QPoly({1, 1}), -3);  // v^-3 (1 + q)
  CHECK(x.coeff(-3) == 1);
  CHECK(x.coeff(-1) == 1);
  CHECK(x.coeff(0) == 0);
  CHECK(x.bar().coeff(3) == 1);
  CHECK(x.bar().bar() == x);

  CHECK(x.to_qpoly(3, true) == QPoly({1, 1}));
  CHECK_THROWS(x.to_qpoly(2, true));  // odd exponent
  CHECK((x - x).is_zero());

  VLaurent y;
  y.add_scaled(v, -2);
  CHECK(y.coeff(1) == -2);
  CHECK_THROWS(y.to_qpoly(5, true));  // negative coefficient
}
