#include "qkey/zpoly.hpp"

#include <algorithm>
#include <sstream>

#include "qkey/error.hpp"

namespace qkey {

ZPoly::ZPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

ZPoly::ZPoly(const Integer& c) {
  if (c != 0) coeffs_.push_back(c);
}

ZPoly::ZPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ZPoly::ZPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

ZPoly ZPoly::monomial(const Integer& c, int degree) {
  ZPoly p;
  if (c == 0) return p;
  p.coeffs_.assign(degree + 1, Integer(0));
  p.coeffs_[degree] = c;
  return p;
}

void ZPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int ZPoly::valuation() const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return -1;
}

Integer ZPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

int ZPoly::term_count() const {
  return static_cast<int>(std::count_if(coeffs_.begin(), coeffs_.end(),
                                        [](const Integer& c) { return c != 0; }));
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.coeffs_.size() == 1) {
    ZPoly r = a;
    return r *= b.coeffs_[0];
  }
  if (a.coeffs_.size() == 1) {
    ZPoly r = b;
    return r *= a.coeffs_[0];
  }
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return ZPoly(std::move(out));
}

ZPoly& ZPoly::operator*=(const ZPoly& o) { return *this = *this * o; }

ZPoly& ZPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

ZPoly ZPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  ZPoly r;
  r.coeffs_.assign(k, Integer(0));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

Integer ZPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly ZPoly::divide_by(const Integer& c) const {
  if (c == 1) return *this;
  ZPoly r = *this;
  for (auto& x : r.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

ZPoly ZPoly::divexact(const ZPoly& d) const {
  if (d.is_zero()) throw DivisionByZero();
  if (is_zero()) return {};
  if (d.coeffs_.size() == 1) {
    ZPoly r = *this;
    for (auto& x : r.coeffs_) {
      if (!mpz_divisible_p(x.get_mpz_t(), d.coeffs_[0].get_mpz_t()))
        throw InternalError("inexact polynomial division");
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.coeffs_[0].get_mpz_t());
    }
    return r;
  }
  if (degree() < d.degree()) throw InternalError("inexact polynomial division");
  std::vector<Integer> rem = coeffs_;
  std::vector<Integer> quot(degree() - d.degree() + 1);
  const Integer& lc = d.leading();
  for (int k = degree() - d.degree(); k >= 0; --k) {
    Integer& top = rem[k + d.degree()];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t()))
      throw InternalError("inexact polynomial division");
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (int j = 0; j <= d.degree(); ++j)
      mpz_submul(rem[k + j].get_mpz_t(), c.get_mpz_t(), d.coeffs_[j].get_mpz_t());
    quot[k] = std::move(c);
  }
  for (const auto& r : rem)
    if (r != 0) throw InternalError("inexact polynomial division");
  return ZPoly(std::move(quot));
}

ZPoly ZPoly::prem(const ZPoly& d) const {
  if (d.is_zero()) throw DivisionByZero();
  std::vector<Integer> rem = coeffs_;
  const int dd = d.degree();
  const Integer& lc = d.leading();
  int deg = degree();
  while (deg >= dd) {
    Integer top = rem[deg];
    for (int j = 0; j < deg; ++j) rem[j] *= lc;
    rem[deg] = 0;
    for (int j = 0; j < dd; ++j)
      mpz_submul(rem[deg - dd + j].get_mpz_t(), top.get_mpz_t(), d.coeffs_[j].get_mpz_t());
    --deg;
    while (deg >= 0 && rem[deg] == 0) --deg;
  }
  rem.resize(deg + 1);
  return ZPoly(std::move(rem));
}

Rational ZPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

std::string ZPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer a = abs(c);
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    if (i == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.sign() < 0 ? -b : b;
  if (b.is_zero()) return a.sign() < 0 ? -a : a;
  Integer ca = a.content(), cb = b.content();
  Integer g;
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_constant() || b.is_constant()) return ZPoly(g);
  ZPoly p = a.divide_by(ca), r = b.divide_by(cb);
  if (p.degree() < r.degree()) std::swap(p, r);
  // primitive remainder sequence
  while (!r.is_zero()) {
    ZPoly s = p.prem(r);
    p = std::move(r);
    if (s.is_zero()) break;
    if (s.is_constant()) return ZPoly(g);
    r = s.divide_by(s.content());
  }
  p = p.divide_by(p.content());
  if (p.sign() < 0) p = -p;
  p *= g;
  return p;
}

}  // namespace qkey
