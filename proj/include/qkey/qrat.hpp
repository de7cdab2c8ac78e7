#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qkey/zpoly.hpp"

namespace qkey {

/// Exact rational function in q: numerator / denominator in Z[q].
///
/// The representation is canonical: numerator and denominator are coprime in
/// Z[q] (content included), the denominator has a positive leading
/// coefficient, and zero is 0/1. Structural equality is therefore value
/// equality.
class QRat {
 public:
  QRat() : den_(1) {}
  QRat(long c) : num_(c), den_(1) {}  // NOLINT
  QRat(const ZPoly& p) : num_(p), den_(1) {}  // NOLINT
  QRat(ZPoly num, ZPoly den);  // canonicalizes; throws DivisionByZero
  explicit QRat(const Rational& r);

  static QRat q() { return QRat(ZPoly::q()); }

  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);
  QRat operator-() const;

  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
  friend bool operator==(const QRat& a, const QRat& b) = default;

  QRat inverse() const;
  QRat pow(int e) const;

  /// Exact value at q = q0; throws Pole when q0 is a root of the denominator.
  Rational eval(const Rational& q0) const;
  /// First `terms` coefficients of the power series at q = 0.
  std::vector<Rational> series(int terms) const;

  /// "(1-q)/(1+q)", "q^2", "-1/(1+q)".
  std::string to_string() const;
  /// True when to_string() needs parentheses to be used as a factor.
  bool needs_parens() const;

 private:
  ZPoly num_;
  ZPoly den_;
};

std::ostream& operator<<(std::ostream& os, const QRat& r);

/// [k]_q = 1 + q + ... + q^(k-1); k must be >= 0.
QRat q_int(int k);
/// [k]_q! = [1]_q [2]_q ... [k]_q.
QRat q_factorial(int k);
/// d_lambda(q): product of q-factorials of part multiplicities, counting the
/// part 0 with multiplicity n - length(lambda).
QRat d_lambda(std::span<const int> lambda, int n);
/// Exact value of `a` at q0; throws Pole.
Rational eval_q(const QRat& a, const Rational& q0);

/// q-adic valuation of a nonzero value (may be negative); INT_MAX for zero.
int q_valuation(const QRat& a);

}  // namespace qkey
