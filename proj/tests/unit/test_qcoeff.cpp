#include <doctest.h>

#include "qkey/error.hpp"
#include "qkey/qrat.hpp"

using namespace qkey;

namespace {
const QRat q = QRat::q();
}

TEST_CASE("zpoly arithmetic and gcd") {
  ZPoly a{1, 1};   // 1+q
  ZPoly b{1, -1};  // 1-q
  CHECK(a * b == ZPoly({1, 0, -1}));
  CHECK((a + b) == ZPoly(2));
  CHECK(gcd(ZPoly({-1, 0, 1}), ZPoly({1, 1})) == ZPoly({1, 1}));
  CHECK(gcd(ZPoly({2, 2}), ZPoly({4})) == ZPoly(2));
  CHECK(ZPoly({1, 0, -1}).divexact(a) == b);
  CHECK_THROWS_AS(ZPoly({1, 0, 1}).divexact(a), InternalError);
  CHECK(ZPoly({1, -1, 0, 2}).to_string() == "1-q+2*q^3");
  CHECK(ZPoly({0, 0, 3}).valuation() == 2);
}

TEST_CASE("qrat canonical form") {
  QRat x(ZPoly({2, 2}), ZPoly({4, 4}));
  CHECK(x == QRat(ZPoly(1), ZPoly(2)));
  QRat y(ZPoly({1}), ZPoly({-1, -1}));
  CHECK(y.den().leading() > 0);
  CHECK(y == QRat(-1) / (1 + q));
  CHECK(QRat(ZPoly(), ZPoly({3, 1})) == QRat());
  CHECK(QRat().den() == ZPoly(1));
}

TEST_CASE("qrat arithmetic examples") {
  CHECK(QRat(1) / (1 + q) + q / (1 + q) == QRat(1));
  CHECK((1 - q) * (QRat(1) / (1 - q)) == QRat(1));
  CHECK_THROWS_AS(QRat(1) / QRat(0), DivisionByZero);
  CHECK_THROWS_AS(QRat(ZPoly(1), ZPoly()), DivisionByZero);
  CHECK_THROWS_AS(QRat().inverse(), DivisionByZero);
  CHECK((q + 1).pow(2) == 1 + 2 * q + q * q);
  CHECK(q.pow(-2) == QRat(1) / (q * q));
}

TEST_CASE("q integers and factorials") {
  CHECK(q_int(0) == QRat(0));
  CHECK(q_int(1) == QRat(1));
  CHECK(q_int(3) == 1 + q + q * q);
  CHECK_THROWS_AS(q_int(-1), InvalidArgument);
  CHECK(q_factorial(3) == (1 + q) * (1 + q + q * q));
  CHECK(q_factorial(0) == QRat(1));
}

TEST_CASE("d_lambda counts the zero part") {
  const int l210[] = {2, 1, 0}, l200[] = {2, 0, 0}, l000[] = {0, 0, 0}, l2[] = {2};
  CHECK(d_lambda(l210, 3) == QRat(1));
  CHECK(d_lambda(l200, 3) == 1 + q);
  CHECK(d_lambda(l000, 3) == (1 + q) * (1 + q + q * q));
  CHECK(d_lambda(l2, 3) == 1 + q);
  const int bad[] = {1, 2};
  CHECK_THROWS_AS(d_lambda(bad, 3), InvalidArgument);
  const int longer[] = {1, 1, 1, 1};
  CHECK_THROWS_AS(d_lambda(longer, 3), InvalidArgument);
}

TEST_CASE("evaluation") {
  CHECK(eval_q(QRat(1) / (1 + q), Rational(0)) == Rational(1));
  CHECK(eval_q(q_int(3), Rational(1)) == Rational(3));
  CHECK_THROWS_AS(eval_q(QRat(1) / (1 - q), Rational(1)), Pole);
  CHECK(eval_q(q / (1 + q), Rational(1, 2)) == Rational(1, 3));
}

TEST_CASE("series and valuation") {
  auto s = (QRat(1) / (1 - q)).series(4);
  CHECK(s == std::vector<Rational>{1, 1, 1, 1});
  CHECK_THROWS_AS((QRat(1) / q).series(2), Pole);
  CHECK(q_valuation(q * q / (1 + q)) == 2);
  CHECK(q_valuation(QRat(1) / (q * q)) == -2);
}

TEST_CASE("pretty printing") {
  CHECK((1 - q) / (1 + q) == QRat(ZPoly({1, -1}), ZPoly({1, 1})));
  CHECK(((1 - q) / (1 + q)).to_string() == "(1-q)/(1+q)");
  CHECK((q * q).to_string() == "q^2");
  CHECK((QRat(-1) / (1 + q)).to_string() == "-1/(1+q)");
  CHECK(QRat().to_string() == "0");
  CHECK((QRat(1) / (2 * q)).to_string() == "1/(2*q)");
}
