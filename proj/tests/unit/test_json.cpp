#include <doctest.h>

#include "qkey/error.hpp"
#include "qkey/json_io.hpp"
#include "qkey/qkey.hpp"
#include "support/golden.hpp"

using namespace qkey;

namespace {
const QRat q = QRat::q();
}

TEST_CASE("qrat schema") {
  Json j = to_json((1 - q) / (1 + q));
  CHECK(j == Json::parse(R"({"num":[1,-1],"den":[1,1]})"));
  CHECK(qrat_from_json(j) == (1 - q) / (1 + q));
  CHECK(to_json(QRat()) == Json::parse(R"({"num":[],"den":[1]})"));
  // Non-canonical input is canonicalized on read.
  CHECK(qrat_from_json(Json::parse(R"({"num":[2,2],"den":[4]})")) == (1 + q) / 2);
  CHECK_THROWS_AS(qrat_from_json(Json::parse(R"({"num":[1],"den":[]})")), DivisionByZero);
}

TEST_CASE("big integers are strings") {
  Integer big("123456789012345678901234567890");
  QRat x{ZPoly(big)};
  Json j = to_json(x);
  CHECK(j["num"][0].is_string());
  CHECK(qrat_from_json(j) == x);
  CHECK_THROWS_AS(integer_from_json(Json("12x")), InvalidArgument);
}

TEST_CASE("laurent schema and round trip") {
  LaurentPoly f = u_poly({1, 0, 2});
  Json j = to_json(f);
  CHECK(j["n"] == 3);
  CHECK(j["terms"][0]["exp"] == Json::parse("[2,1,0]"));
  CHECK(laurent_from_json(j) == f);
  CHECK(laurent_from_json(Json::parse(j.dump())) == f);
  CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"n":2,"terms":[{"exp":[1],"coeff":{"num":[1],"den":[1]}}]})")),
                  InvalidArgument);
}

TEST_CASE("hecke schema and round trip") {
  HeckeElt h = yang_baxter(Permutation({3, 1, 2}), YBVariant::Hat);
  Json j = to_json(h);
  CHECK(j["n"] == 3);
  CHECK(j["terms"][0].contains("perm"));
  CHECK(hecke_from_json(j) == h);
}

TEST_CASE("hl expansion schema and round trip") {
  HLExpansion e = straighten_Q({-2, 3, 2});
  Json j = to_json(e);
  CHECK(j["terms"][0]["partition"] == Json::parse("[3]"));
  CHECK(j["terms"][2]["partition"] == Json::parse("[1,1,1]"));
  CHECK(hl_expansion_from_json(j) == e);
}

TEST_CASE("op word schema and round trip") {
  OpWord w = yang_baxter_word(Permutation({3, 4, 1, 2}), YBVariant::Hat);
  Json j = to_json(w);
  CHECK(j[0]["kind"] == "nabla");
  CHECK(op_word_from_json(j) == w);
  OpWord plain = op_word_from_json(Json::parse(R"([{"kind":"box","i":2}])"));
  CHECK(plain.size() == 1);
  CHECK(plain[0].shift.is_zero());
}

TEST_CASE("matrix and report round trip") {
  QMatrix m = golden::u_to_k_weight3();
  CHECK(matrix_from_json(to_json(m)) == m);
  ScalarReport r = verify_duality(Partition{2}, 3);
  Json j = to_json(r);
  CHECK(j["lambda"] == Json::parse("[2,0,0]"));
  CHECK(j["n"] == 3);
  CHECK(j["pass"] == true);
  CHECK(j["gram"].size() == 3);
  ScalarReport back = scalar_report_from_json(j);
  CHECK(back.gram == r.gram);
  CHECK(back.lambda == r.lambda);
  CHECK(back.pass == r.pass);
}
