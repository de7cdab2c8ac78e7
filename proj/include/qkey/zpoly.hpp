#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qkey {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients, stored in ascending powers. The zero polynomial has no
/// coefficients; otherwise the last coefficient is nonzero.
class ZPoly {
 public:
  ZPoly() = default;
  ZPoly(long c);  // NOLINT: constants convert implicitly
  explicit ZPoly(const Integer& c);
  explicit ZPoly(std::vector<Integer> coeffs);
  ZPoly(std::initializer_list<long> coeffs);

  static ZPoly monomial(const Integer& c, int degree);
  static ZPoly q() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Lowest power with a nonzero coefficient; -1 for zero.
  int valuation() const;

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(int i) const;
  const Integer& leading() const { return coeffs_.back(); }
  int sign() const { return is_zero() ? 0 : sgn(coeffs_.back()); }

  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  ZPoly& operator*=(const ZPoly& o);
  ZPoly& operator*=(const Integer& c);
  ZPoly operator-() const;

  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend bool operator==(const ZPoly& a, const ZPoly& b) = default;

  /// Multiply by q^k (k >= 0).
  ZPoly shifted(int k) const;

  /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  Integer content() const;
  ZPoly divide_by(const Integer& c) const;  // exact

  /// Exact quotient in Z[q]; throws InternalError when the division is not
  /// exact.
  ZPoly divexact(const ZPoly& d) const;
  /// Pseudo-remainder: lc(d)^(deg - deg d + 1) * this mod d.
  ZPoly prem(const ZPoly& d) const;

  Rational eval(const Rational& x) const;

  /// Terse rendering in ascending powers: "1-q+2*q^3".
  std::string to_string(const char* var = "q") const;
  /// Number of nonzero coefficients.
  int term_count() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// gcd in Z[q], normalized to a positive leading coefficient. gcd(0,0) = 0.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

}  // namespace qkey
