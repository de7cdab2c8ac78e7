#include <doctest.h>

#include "qkey/error.hpp"
#include "qkey/operators.hpp"
#include "qkey/qkey.hpp"
#include "qkey/scalar.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

using namespace qkey;
using qkey::testing::poly;

namespace {
const QRat q = QRat::q();
}

TEST_CASE("scalar_q examples") {
  CHECK(scalar_q(LaurentPoly({1, 0, 3}), LaurentPoly({0, 1, 3})) == golden::printed_scalar_103_013());
  CHECK(scalar_q(LaurentPoly::constant(3, 1), LaurentPoly::constant(3, 1)) == QRat(1));
  CHECK(scalar_q(u_poly({2, 1, 0}), uhat_poly({0, 1, 2})) == QRat(1));
  CHECK(scalar_q(u_poly({1, 2, 0}), uhat_poly({0, 1, 2})).is_zero());
  CHECK_THROWS_AS(scalar_q(LaurentPoly({1, 0}), LaurentPoly({1, 0, 0})), InvalidArgument);
}

TEST_CASE("scalar_0 examples") {
  for (int d = 0; d <= 3; ++d)
    for (const auto& v : weights_of_degree(3, d))
      CHECK(scalar_0(key_poly(v, KeyVariant::Plain), key_poly(v.reversed(), KeyVariant::Hat)) == QRat(1));
  CHECK(scalar_0(LaurentPoly({1, 0, 3}), LaurentPoly({0, 1, 3})).is_zero());
  CHECK(scalar_0(LaurentPoly::constant(2, 1), LaurentPoly::constant(2, 1)) == QRat(1));
}

TEST_CASE("ct_oracle examples") {
  CHECK(ct_oracle(LaurentPoly({-1, 1}), LaurentPoly::constant(2, 1), 3) == q - 1);
  for (int cap : {0, 2, 5}) CHECK(ct_oracle(LaurentPoly::constant(3, 1), LaurentPoly::constant(3, 1), cap) == QRat(1));
  CHECK(ct_oracle(LaurentPoly({1, 0, 3}), LaurentPoly({0, 1, 3}), 6) == golden::printed_scalar_103_013());
  // Truncation drops the q^5 term at cap 4.
  CHECK(ct_oracle(LaurentPoly({1, 0, 3}), LaurentPoly({0, 1, 3}), 4) ==
        golden::printed_scalar_103_013() - q.pow(5));
  CHECK_THROWS_AS(ct_oracle(LaurentPoly::constant(2, 1), LaurentPoly::constant(2, 1), -1), InvalidArgument);
  auto st = ct_oracle_stable(LaurentPoly({1, 0, 3}), LaurentPoly({0, 1, 3}), 2, 12);
  CHECK(st.stable);
  CHECK(st.value == golden::printed_scalar_103_013());
}

TEST_CASE("agree_mod_q") {
  CHECK(agree_mod_q(QRat(1) / (1 - q), 1 + q + q * q, 2));
  CHECK(!agree_mod_q(QRat(1) / (1 - q), 1 + q, 2));
}

TEST_CASE("verify_duality") {
  auto r = verify_duality(Partition{2, 1}, 3);
  CHECK(r.pass);
  CHECK(r.gram.is_identity());
  CHECK(r.gram.entries.size() == 6);
  CHECK(r.lambda == std::vector<int>{2, 1, 0});
  CHECK(verify_duality(Partition{2}, 3).gram.entries.size() == 3);
  CHECK(verify_duality(Partition{2}, 3).pass);
  auto z = verify_duality(Partition{}, 2);
  CHECK(z.pass);
  CHECK(z.gram.entries == std::vector<std::vector<QRat>>{{1}});
}

TEST_CASE("verify_monomial_duality") {
  auto r = verify_monomial_duality(Partition{2, 1}, 3);
  CHECK(r.pass);
  for (size_t k = 0; k < r.gram.row_labels.size(); ++k)
    CHECK(r.gram.entries[k][0] == QRat(r.gram.row_labels[k] == std::vector<int>{0, 1, 2} ? 1 : 0));
  CHECK(verify_monomial_duality(Partition{1, 1, 1}, 3).pass);
  auto s = verify_monomial_duality(Partition{2}, 3);
  CHECK(s.pass);
  CHECK(s.gram.row_labels.back() == std::vector<int>{0, 0, 2});
  CHECK(s.gram.entries.back()[0] == QRat(1));
}

TEST_CASE("adjoint operators") {
  const LaurentPoly x10({1, 0}), x01({0, 1});
  CHECK(scalar_q(apply_box(x10, 1), x01) == scalar_q(x10, apply_box(x01, 1)));
  const LaurentPoly sym = testing::monomial_symmetric(Partition{1}, 3);
  const LaurentPoly g = poly(3, {{{0, 1, 0}, 1}, {{1, -1, 1}, q}});
  CHECK(scalar_q(apply_nabla(sym, 1), g).is_zero());
  CHECK(scalar_q(sym, apply_nabla(g, 2)).is_zero());
  auto rep = verify_adjoint_ops(3, 20, 2, 3);
  CHECK(rep.ok());
}

TEST_CASE("cauchy") {
  CHECK(verify_cauchy(1, 5));
  CHECK(verify_cauchy(2, 3));
  CHECK(verify_cauchy(3, 3));
}

TEST_CASE("monomial vanishing lemma") { CHECK(check_monomial_vanishing(3, 3).empty()); }
