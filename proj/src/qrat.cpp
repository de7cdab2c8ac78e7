#include "qkey/qrat.hpp"

#include <climits>
#include <map>
#include <ostream>

#include "qkey/error.hpp"

namespace qkey {

namespace {

void fix_sign(ZPoly& num, ZPoly& den) {
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
}

}  // namespace

QRat::QRat(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = ZPoly(1);
    return;
  }
  if (den_.is_one()) return;
  ZPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
  fix_sign(num_, den_);
}

QRat::QRat(const Rational& r)
    : QRat(ZPoly(Integer(r.get_num())), ZPoly(Integer(r.get_den()))) {}

QRat& QRat::operator+=(const QRat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    ZPoly n = num_ + o.num_;
    if (den_.is_one()) {
      num_ = std::move(n);
      return *this;
    }
    return *this = QRat(std::move(n), den_);
  }
  // a + c/d with d coprime to c: (a d + c)/d is already reduced.
  if (den_.is_one()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    if (num_.is_zero()) den_ = ZPoly(1);
    return *this;
  }
  if (o.den_.is_one()) {
    num_ = num_ + o.num_ * den_;
    if (num_.is_zero()) den_ = ZPoly(1);
    return *this;
  }
  ZPoly g = gcd(den_, o.den_);
  if (g.is_one()) {
    ZPoly n = num_ * o.den_ + o.num_ * den_;
    ZPoly d = den_ * o.den_;
    num_ = std::move(n);
    den_ = std::move(d);
    if (num_.is_zero()) den_ = ZPoly(1);
    fix_sign(num_, den_);
    return *this;
  }
  ZPoly b1 = den_.divexact(g), d1 = o.den_.divexact(g);
  ZPoly n = num_ * d1 + o.num_ * b1;
  return *this = QRat(std::move(n), b1 * o.den_);
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
  if (is_zero() || o.is_zero()) return *this = QRat();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  ZPoly g1 = gcd(num_, o.den_);
  ZPoly g2 = gcd(o.num_, den_);
  ZPoly a = g1.is_one() ? num_ : num_.divexact(g1);
  ZPoly d = g1.is_one() ? o.den_ : o.den_.divexact(g1);
  ZPoly c = g2.is_one() ? o.num_ : o.num_.divexact(g2);
  ZPoly b = g2.is_one() ? den_ : den_.divexact(g2);
  num_ = a * c;
  den_ = b * d;
  fix_sign(num_, den_);
  return *this;
}

QRat QRat::inverse() const {
  if (is_zero()) throw DivisionByZero();
  QRat r;
  r.num_ = den_;
  r.den_ = num_;
  fix_sign(r.num_, r.den_);
  return r;
}

QRat& QRat::operator/=(const QRat& o) { return *this *= o.inverse(); }

QRat QRat::operator-() const {
  QRat r = *this;
  r.num_ = -r.num_;
  return r;
}

QRat QRat::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QRat r = 1, b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rational QRat::eval(const Rational& q0) const {
  Rational d = den_.eval(q0);
  if (d == 0) throw Pole("pole at q = " + q0.get_str() + " in " + to_string());
  Rational r = num_.eval(q0) / d;
  r.canonicalize();
  return r;
}

std::vector<Rational> QRat::series(int terms) const {
  if (den_.coeff(0) == 0) throw Pole("no power series at q = 0 for " + to_string());
  std::vector<Rational> out(terms);
  Rational d0(den_.coeff(0));
  for (int k = 0; k < terms; ++k) {
    Rational acc(num_.coeff(k));
    for (int j = 1; j <= k && j <= den_.degree(); ++j) acc -= Rational(den_.coeff(j)) * out[k - j];
    out[k] = acc / d0;
    out[k].canonicalize();
  }
  return out;
}

bool QRat::needs_parens() const {
  if (!den_.is_one()) return true;
  return num_.term_count() > 1;
}

std::string QRat::to_string() const {
  std::string n = num_.to_string();
  if (den_.is_one()) return n;
  if (num_.term_count() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (den_.term_count() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const QRat& r) { return os << r.to_string(); }

QRat q_int(int k) {
  if (k < 0) throw InvalidArgument("q-integer of a negative number: " + std::to_string(k));
  std::vector<Integer> c(k, Integer(1));
  return QRat(ZPoly(std::move(c)));
}

QRat q_factorial(int k) {
  QRat r = 1;
  for (int j = 2; j <= k; ++j) r *= q_int(j);
  return r;
}

QRat d_lambda(std::span<const int> lambda, int n) {
  if (static_cast<int>(lambda.size()) > n) {
    for (size_t i = n; i < lambda.size(); ++i)
      if (lambda[i] != 0) throw InvalidArgument("partition longer than n");
  }
  std::map<int, int> mult;
  int parts = 0;
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0) throw InvalidArgument("negative part in partition");
    if (i > 0 && lambda[i] > lambda[i - 1]) throw InvalidArgument("not a partition");
    if (lambda[i] > 0) {
      ++mult[lambda[i]];
      ++parts;
    }
  }
  mult[0] = n - parts;
  QRat r = 1;
  for (const auto& [part, m] : mult) r *= q_factorial(m);
  return r;
}

Rational eval_q(const QRat& a, const Rational& q0) { return a.eval(q0); }

int q_valuation(const QRat& a) {
  if (a.is_zero()) return INT_MAX;
  return a.num().valuation() - a.den().valuation();
}

}  // namespace qkey
