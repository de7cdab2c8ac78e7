#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qkey/hecke.hpp"
#include "qkey/laurent.hpp"

namespace qkey {

/// Operators act on the right of their operand: f -> f Op.
enum class OpKind { Partial, Pi, PiHat, T, Box, Nabla };

std::string to_string(OpKind kind);
OpKind op_kind_from_string(const std::string& s);

/// The shifted operator Op_i + shift.
struct OpFactor {
  OpKind kind = OpKind::Box;
  int index = 1;
  QRat shift;

  friend bool operator==(const OpFactor&, const OpFactor&) = default;
};

/// Applied left to right.
using OpWord = std::vector<OpFactor>;

/// f d_i = (f - f^{s_i}) / (x_i - x_{i+1}), exact on Laurent polynomials.
LaurentPoly apply_partial(const LaurentPoly& f, int i);
/// f pi_i = (x_i f) d_i.
LaurentPoly apply_pi(const LaurentPoly& f, int i);
/// f pihat_i = (f d_i) x_{i+1} = f pi_i - f.
LaurentPoly apply_pihat(const LaurentPoly& f, int i);
/// f box_i = (f (x_i - q x_{i+1})) d_i.
LaurentPoly apply_box(const LaurentPoly& f, int i);
/// f nabla_i = (f d_i) (x_{i+1} - q x_i) = f box_i - (1+q) f.
LaurentPoly apply_nabla(const LaurentPoly& f, int i);
/// f T_i = f box_i - f.
LaurentPoly apply_T(const LaurentPoly& f, int i);

LaurentPoly apply_op(const LaurentPoly& f, OpKind kind, int i);
LaurentPoly apply_factor(const LaurentPoly& f, const OpFactor& op);
LaurentPoly apply_word(const LaurentPoly& f, const OpWord& word);

/// f d_omega along a reduced word of the longest permutation.
LaurentPoly apply_partial_omega(const LaurentPoly& f);
/// Same along an explicit word (for word-independence checks).
LaurentPoly apply_partial_word(const LaurentPoly& f, const std::vector<int>& word);

/// Plain: box_i - q[k-1]_q/[k]_q (= T_i + 1/[k]_q).
/// Hat: nabla_i + q[k-1]_q/[k]_q (= T_i - q^k/[k]_q). Requires k >= 1.
OpFactor yang_baxter_factor(YBVariant variant, int i, int k);
/// R_i(a,b) and S_i(a,b): the factors above with k = b - a.
OpFactor r_factor(int i, int a, int b);
OpFactor s_factor(int i, int a, int b);
/// Factorization of Y_sigma (or Y^_sigma) along the given reduced word.
OpWord yang_baxter_word(int n, const std::vector<int>& word, YBVariant variant);
OpWord yang_baxter_word(const Permutation& sigma, YBVariant variant);

/// f h for h in the Hecke algebra, through its T-expansion.
LaurentPoly apply_hecke(const LaurentPoly& f, const HeckeElt& h);

/// prod_{i<j} (x_i - q x_j)
LaurentPoly q_vandermonde(int n);
/// prod_{i<j} (x_j - q x_i)
LaurentPoly q_vandermonde_dual(int n);

/// One named identity checked over random operands.
struct IdentityCheck {
  std::string name;
  int passed = 0;
  int total = 0;
  bool ok() const { return passed == total; }
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool ok() const;
};

/// Random Laurent polynomial with `terms` monomials, exponents in
/// [-range, range], small integer multiples of powers of q as coefficients.
LaurentPoly random_laurent(int n, int terms, int range, std::mt19937_64& rng);

/// Braid and quadratic relations for T_i, the box/nabla identities, the
/// Yang-Baxter equation for R and S, and the q = 0 degeneration to pi/pihat,
/// each on `trials` random polynomials.
IdentityReport verify_operator_identities(int n, int trials, int range, std::uint64_t seed);

}  // namespace qkey
