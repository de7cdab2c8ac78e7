#include <doctest.h>

#include "qkey/error.hpp"
#include "qkey/operators.hpp"
#include "qkey/qkey.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

using namespace qkey;
using qkey::testing::poly;

namespace {
const QRat q = QRat::q();
}

TEST_CASE("families from strings") {
  CHECK(family_from_string("Uhat") == FamilyId::Uhat);
  CHECK(family_from_string("M") == FamilyId::Monomial);
  CHECK(family_from_string("P") == FamilyId::HL_P);
  CHECK_THROWS_AS(family_from_string("X"), InvalidArgument);
  CHECK(to_string(FamilyId::Khat) == "Khat");
}

TEST_CASE("u_poly examples") {
  CHECK(u_poly({2, 1, 0}) == LaurentPoly({2, 1, 0}));
  for (const auto& [v, p] : golden::figure_u210()) CHECK(u_poly(v) == p);
  CHECK(u_poly({2, 0, 0}) == LaurentPoly({2, 0, 0}));
  CHECK(u_poly({0, 1, 2}) == hl_P(Partition{2, 1}, 3));
  CHECK_THROWS_AS(u_poly({1, -1, 0}), InvalidArgument);
}

TEST_CASE("uhat_poly examples") {
  for (const auto& [v, p] : golden::figure_uhat210()) CHECK(uhat_poly(v) == p);
  CHECK(uhat_poly({0, 2, 0}) == poly(3, {{{0, 2, 0}, 1}, {{1, 1, 0}, 1 - q}, {{2, 0, 0}, -q}}));
  CHECK(uhat_poly({0, 2, 0}) == apply_nabla(LaurentPoly({2, 0, 0}), 1));
  CHECK_THROWS_AS(uhat_poly({0, -2, 0}), InvalidArgument);
}

TEST_CASE("x^{200} figures: computed values versus printed labels") {
  CHECK(u_poly({0, 2, 0}) == golden::printed_uhat020());
  CHECK(uhat_poly({0, 2, 0}) == golden::printed_u020());
  CHECK(u_poly({0, 0, 2}) == golden::printed_uhat002());
  CHECK(u_poly({0, 0, 2}) == hl_P(Partition{2}, 3));
  CHECK(uhat_poly({0, 0, 2}) == golden::printed_u002());
}

TEST_CASE("u_poly along explicit words") {
  CHECK(u_poly_along({0, 1, 2}, {1, 2, 1}) == u_poly({0, 1, 2}));
  CHECK(u_poly_along({0, 1, 2}, {2, 1, 2}) == u_poly({0, 1, 2}));
  CHECK_THROWS_AS(u_poly_along({0, 1, 2}, {1, 2}), InvalidArgument);
}

TEST_CASE("U and Uhat through the Hecke expansion") {
  for (const auto& v : weights_of_degree(3, 3)) {
    const Exponent lam = v.sorted_desc();
    const LaurentPoly seed(lam, d_lambda(lam.span(), 3).inverse());
    CHECK(u_poly(v) == apply_hecke(seed, yang_baxter(zeta(v), YBVariant::Plain)));
    CHECK(uhat_poly(v) == apply_hecke(LaurentPoly(lam), yang_baxter(eta(v), YBVariant::Hat)));
  }
}

TEST_CASE("key polynomials") {
  CHECK(key_poly({2, 1, 0}, KeyVariant::Plain) == LaurentPoly({2, 1, 0}));
  CHECK(key_poly({0, 1, 2}, KeyVariant::Plain) == testing::schur_tableaux(Partition{2, 1}, 3));
  CHECK(key_poly({1, 2, 0}, KeyVariant::Hat) == LaurentPoly({1, 2, 0}));
  CHECK(key_poly({1, 2, 0}, KeyVariant::Hat) == specialize_q(uhat_poly({1, 2, 0}), Rational(0)));
  CHECK(key_poly({0, 0, 3}, KeyVariant::Plain) == testing::schur_tableaux(Partition{3}, 3));
}

TEST_CASE("expand_in_family") {
  auto e = expand_in_family(u_poly({0, 1, 2}), FamilyId::K, 3, 3);
  CHECK(e == std::map<Exponent, QRat, std::greater<>>{{{0, 1, 2}, 1}, {{1, 1, 1}, -q * (1 + q)}});
  auto f = expand_in_family(u_poly({0, 0, 3}), FamilyId::K, 3, 3);
  CHECK(f == std::map<Exponent, QRat, std::greater<>>{{{0, 0, 3}, 1}, {{0, 1, 2}, -q}, {{1, 1, 1}, q * q}});
  auto g = expand_in_family(key_poly({1, 0, 2}, KeyVariant::Plain), FamilyId::K, 3, 3);
  CHECK(g == std::map<Exponent, QRat, std::greater<>>{{{1, 0, 2}, 1}});
  auto h = expand_in_family(hl_P(Partition{2, 1}, 3) * q + hl_P(Partition{1, 1, 1}, 3), FamilyId::HL_P, 3, 3);
  CHECK(h == std::map<Exponent, QRat, std::greater<>>{{{2, 1, 0}, q}, {{1, 1, 1}, 1}});
  CHECK_THROWS_AS(expand_in_family(poly(3, {{{1, 0, 0}, 1}, {{1, 1, 0}, 1}}), FamilyId::K, 3, 1),
                  InvalidArgument);
  CHECK_THROWS_AS(expand_in_family(LaurentPoly({1, 0, 0}), FamilyId::HL_P, 3, 1), InternalError);
}

TEST_CASE("transition matrices") {
  CHECK(transition_matrix(FamilyId::U, FamilyId::K, 3, 3) == golden::u_to_k_weight3());
  CHECK(transition_matrix(FamilyId::Uhat, FamilyId::Khat, 3, 3) == golden::uhat_to_khat_weight3());
  CHECK(transition_matrix(FamilyId::U, FamilyId::Monomial, 3, 2).entries.size() == 6);
  for (auto fam : {FamilyId::U, FamilyId::Uhat, FamilyId::K, FamilyId::Khat}) {
    // Unitriangular in right-to-left order: columns reindexed reversed lex.
    auto m = transition_matrix(fam, FamilyId::Monomial, 3, 3);
    for (size_t c = 0; c < m.col_labels.size(); ++c) CHECK(m.entries[c][c] == QRat(1));
  }
}

TEST_CASE("family_index") {
  CHECK(family_index(FamilyId::HL_P, 3, 3) == std::vector<Exponent>{{3, 0, 0}, {2, 1, 0}, {1, 1, 1}});
  CHECK(family_index(FamilyId::U, 2, 2) == std::vector<Exponent>{{2, 0}, {1, 1}, {0, 2}});
}
