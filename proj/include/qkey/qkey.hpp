#pragma once

#include <map>
#include <string>
#include <vector>

#include "qkey/hall.hpp"
#include "qkey/laurent.hpp"
#include "qkey/matrix.hpp"

namespace qkey {

enum class FamilyId { U, Uhat, K, Khat, Monomial, HL_P };

std::string to_string(FamilyId f);
/// Accepts U, Uhat, K, Khat, M/Monomial, P/HL_P.
FamilyId family_from_string(const std::string& s);

/// U_v = (x^lambda / d_lambda(q)) Y_zeta(v), lambda the decreasing reordering.
LaurentPoly u_poly(const Exponent& v);
/// Û_v = x^lambda Y^_eta(v).
LaurentPoly uhat_poly(const Exponent& v);
/// U_v computed along an explicit reduced word of zeta(v).
LaurentPoly u_poly_along(const Exponent& v, const std::vector<int>& word);

enum class KeyVariant { Plain, Hat };

/// K_v (pi_i steps) or K^_v (pihat_i steps) from the dominant seed x^lambda.
LaurentPoly key_poly(const Exponent& v, KeyVariant variant);
/// Same recursion, but always sorting the rightmost ascent first.
LaurentPoly key_poly_rightmost(const Exponent& v, KeyVariant variant);

/// Member of a family indexed by v. HL_P requires a dominant v and returns
/// P_v in v.size() variables; Monomial returns x^v.
LaurentPoly family_poly(FamilyId family, const Exponent& v);

/// Indices spanning the homogeneous degree-d piece for the family: all of
/// N^n for the non-symmetric families, partitions (as dominant weights) for
/// HL_P. Descending lexicographic order.
std::vector<Exponent> family_index(FamilyId family, int n, int degree);

/// Coefficients of f in the target family, by triangular elimination
/// against leading monomials. Throws InvalidArgument for inhomogeneous input
/// and InternalError if a remainder cannot be eliminated.
std::map<Exponent, QRat, std::greater<>> expand_in_family(const LaurentPoly& f, FamilyId target,
                                                          int n, int degree);

/// Column j = expansion of the j-th member of `from` over `to`.
QMatrix transition_matrix(FamilyId from, FamilyId to, int n, int degree);

}  // namespace qkey
