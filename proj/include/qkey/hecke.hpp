#pragma once

#include <map>
#include <string>
#include <vector>

#include "qkey/matrix.hpp"
#include "qkey/perm.hpp"
#include "qkey/qrat.hpp"

namespace qkey {

/// Element of the Hecke algebra H_n(q), expanded in the basis T_sigma.
class HeckeElt {
 public:
  using TermMap = std::map<Permutation, QRat>;

  HeckeElt() = default;
  explicit HeckeElt(int n) : n_(n) {}
  /// c * T_sigma
  HeckeElt(const Permutation& sigma, QRat c = 1);
  static HeckeElt one(int n) { return HeckeElt(Permutation::identity(n)); }
  /// The generator T_i.
  static HeckeElt generator(int n, int i) { return HeckeElt(Permutation::simple(n, i)); }

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  QRat coeff(const Permutation& sigma) const;
  void add_term(const Permutation& sigma, const QRat& c);

  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  HeckeElt& operator*=(const QRat& c);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(HeckeElt a, const QRat& c) { return a *= c; }
  friend HeckeElt operator*(const HeckeElt& a, const HeckeElt& b);
  friend bool operator==(const HeckeElt&, const HeckeElt&) = default;

  std::string to_string() const;

 private:
  int n_ = 0;
  TermMap terms_;
};

/// h * T_i, using T_sigma T_i = T_{sigma s_i} when the length rises and
/// q T_{sigma s_i} + (q-1) T_sigma otherwise.
HeckeElt mul_by_Ti(const HeckeElt& h, int i);
HeckeElt mul(const HeckeElt& a, const HeckeElt& b);
/// Anti-automorphism T_sigma -> T_{sigma^-1}; coefficients are fixed.
HeckeElt phi(const HeckeElt& h);
/// Coefficient of T_omega in a * phi(b).
QRat bilinear(const HeckeElt& a, const HeckeElt& b);

enum class YBVariant { Plain, Hat };

/// Shift c in the factor (T_i + c) used when extending sigma by s_i with
/// k = sigma(i+1) - sigma(i) >= 1: plain 1/[k]_q, hat -q^k/[k]_q.
QRat yb_shift(YBVariant variant, int k);

/// Yang-Baxter element Y_sigma (plain) or its adjoint Y^_sigma (hat), at the
/// spectral parameters (1, q, ..., q^(n-1)). Memoized; thread-safe.
HeckeElt yang_baxter(const Permutation& sigma, YBVariant variant);
/// Same element built along an explicit reduced word of sigma.
HeckeElt yang_baxter_along(int n, const std::vector<int>& word, YBVariant variant);

/// Columns are T-expansions of Y_sigma; rows and columns in lexicographic
/// one-line order.
QMatrix yb_transition_matrix(int n, YBVariant variant);

/// Entry (sigma, nu) = <Y_sigma, Y^_{compose(omega, nu)}>; the identity matrix
/// when the two Yang-Baxter bases are adjoint. Lexicographic one-line order.
QMatrix yb_duality_matrix(int n);

}  // namespace qkey
