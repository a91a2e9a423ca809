#include "doctest.h"
#include "forkalg/laurent.hpp"

#include <stdexcept>

using namespace forkalg;

TEST_CASE("laurent arithmetic basics") {
  Laurent zero;
  CHECK(zero.is_zero());
  CHECK(zero.str() == "0");

  Laurent one(1);
  Laurent q = Laurent::q(1);
  Laurent qinv = Laurent::q(-1);

  CHECK(one + q == Laurent::term(0, 1) + Laurent::term(1, 1));
  CHECK(q * qinv == one);
  CHECK((q - q).is_zero());
  CHECK(q.shifted(3) == Laurent::q(4));

  SUBCASE("coefficient access") {
    Laurent p = Laurent::term(-1, 2) + Laurent::term(3, 5);
    CHECK(p.coeff(-1) == 2);
    CHECK(p.coeff(3) == 5);
    CHECK(p.coeff(0) == 0);
    CHECK(p.lo() == -1);
    CHECK(p.hi() == 3);
  }

  SUBCASE("bar swaps q and q^-1") {
    Laurent p = Laurent::term(-1, 2) + Laurent::term(3, 5);
    CHECK(p.bar() == Laurent::term(1, 2) + Laurent::term(-3, 5));
    CHECK(p.bar().bar() == p);
  }

  SUBCASE("evaluation at one sums coefficients") {
    Laurent p = Laurent::term(-1, 2) + Laurent::term(3, 5);
    CHECK(p.at_one() == 7);
    CHECK(zero.at_one() == 0);
  }

  SUBCASE("truncation drops high terms only") {
    Laurent p = Laurent::term(-2, 1) + Laurent::term(4, 3) + Laurent::term(9, 1);
    CHECK(p.truncated(4) == Laurent::term(-2, 1) + Laurent::term(4, 3));
    CHECK(p.truncated(100) == p);
  }
}

TEST_CASE("quantum integers in q^2") {
  CHECK(qnum2(0).is_zero());
  CHECK(qnum2(1) == Laurent(1));
  CHECK(qnum2(2) == Laurent(1) + Laurent::q(2));
  CHECK(qnum2(3) == Laurent(1) + Laurent::q(2) + Laurent::q(4));

  CHECK(qfact2(0) == Laurent(1));
  CHECK(qfact2(1) == Laurent(1));
  CHECK(qfact2(3) == qnum2(1) * qnum2(2) * qnum2(3));

  // (m)_{q^2} * (1 - q^2) telescopes.
  Laurent one_minus = Laurent(1) - Laurent::q(2);
  for (int m = 1; m <= 6; ++m)
    CHECK(qnum2(m) * one_minus == Laurent(1) - Laurent::q(2 * m));
}

TEST_CASE("rational function field") {
  QRat zero;
  CHECK(zero.is_zero());

  QRat half(Laurent(1), Laurent(2));
  CHECK(half + half == QRat(Laurent(1)));

  QRat a(qnum2(3), qfact2(2));
  QRat b(qnum2(2), Laurent(1));
  CHECK(a * b == QRat(qnum2(3)));  // (3)/((2)(1)) * (2) = (3)
  CHECK(a / a == QRat(Laurent(1)));
  CHECK(a - a == QRat());

  SUBCASE("canonical form makes equality reliable") {
    QRat x(Laurent::q(1) * qnum2(2), qnum2(2) * qnum2(2));
    QRat y(Laurent::q(1), qnum2(2));
    CHECK(x == y);
  }

  SUBCASE("denominators stay honest polynomials") {
    // q^-3 in the denominator migrates into the numerator.
    QRat x(Laurent(1), Laurent::q(-3));
    CHECK(x == QRat(Laurent::q(3)));
    CHECK(x.den() == Laurent(1));
  }

  SUBCASE("division by zero throws") {
    CHECK_THROWS_AS(QRat(Laurent(1), Laurent()), std::domain_error);
    CHECK_THROWS_AS(a / zero, std::domain_error);
  }
}

TEST_CASE("series truncation of rational functions") {
  // 1/(1-q^2) = 1 + q^2 + q^4 + ... through the requested degree.
  QRat geo(Laurent(1), Laurent(1) - Laurent::q(2));
  Laurent expect;
  for (int d = 0; d <= 12; d += 2) expect = expect + Laurent::q(d);
  CHECK(geo.series_truncate(12) == expect);

  // Genuine Laurent polynomials truncate as themselves.
  QRat poly(qnum2(3) * Laurent::q(-2));
  CHECK(poly.series_truncate(8) == (qnum2(3) * Laurent::q(-2)).truncated(8));

  // (1+q^2)/(1-q^2) = 1 + 2q^2 + 2q^4 + ...
  QRat r(qnum2(2), Laurent(1) - Laurent::q(2));
  Laurent e2 = Laurent(1);
  for (int d = 2; d <= 10; d += 2) e2 = e2 + Laurent::term(d, 2);
  CHECK(r.series_truncate(10) == e2);

  // Truncating at successive degrees is coherent.
  QRat s(qnum2(3), qfact2(2));
  CHECK(s.series_truncate(6).truncated(4) == s.series_truncate(4));
}
