#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qkey/exponent.hpp"
#include "qkey/qrat.hpp"

namespace qkey {

/// Sparse Laurent polynomial in x_1..x_n with QRat coefficients.
///
/// Terms are kept in descending left-to-right lexicographic order of their
/// exponents (300, 210, 201, 120, ...); no stored coefficient is zero.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, QRat, std::greater<>>;

  LaurentPoly() = default;
  explicit LaurentPoly(int n);
  /// c * x^e
  LaurentPoly(const Exponent& e, QRat c = 1);
  static LaurentPoly constant(int n, QRat c);
  /// x_i as a polynomial in n variables (0-based i).
  static LaurentPoly variable(int n, int i);

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Coefficient of x^e (zero when absent).
  QRat coeff(const Exponent& e) const;
  /// Adds c x^e in place, pruning a cancelled term.
  void add_term(const Exponent& e, const QRat& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const QRat& c);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const QRat& c) { return a *= c; }
  friend LaurentPoly operator*(const QRat& c, LaurentPoly a) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// Multiply every term by x^e.
  LaurentPoly shifted(const Exponent& e) const;

  /// Applies `fn` to every coefficient (zero results are dropped).
  LaurentPoly map_coeffs(const std::function<QRat(const QRat&)>& fn) const;

  bool is_homogeneous() const;
  /// Total degree of the first term; 0 for the zero polynomial.
  int degree() const;

  /// "x^{210} + (1-q)*x^{111}"
  std::string to_string() const;

 private:
  void check_same(const LaurentPoly& o) const;
  int n_ = 0;
  TermMap terms_;
};

/// Multiplies two polynomials of the same arity; scale = multiplication by a
/// coefficient. Mismatched n raises InvalidArgument.
LaurentPoly scale(const LaurentPoly& f, const QRat& c);

/// f^{s_i}: exchange x_i and x_{i+1} (1-based i).
LaurentPoly swap_vars(const LaurentPoly& f, int i);
/// x_i -> 1/x_{n+1-i}; exponent v becomes -(v reversed).
LaurentPoly club(const LaurentPoly& f);

/// All terms whose exponents are maximal for compare_order. Throws on zero.
std::vector<std::pair<Exponent, QRat>> leading_terms(const LaurentPoly& f);

/// Termwise evaluation at q = q0. The result has constant coefficients.
/// Throws Pole naming the offending exponent.
LaurentPoly specialize_q(const LaurentPoly& f, const Rational& q0);

}  // namespace qkey
