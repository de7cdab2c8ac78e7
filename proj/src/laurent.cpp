#include "qkey/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "qkey/error.hpp"

namespace qkey {

LaurentPoly::LaurentPoly(int n) : n_(n) {
  if (n < 0 || n > kMaxVars) throw InvalidArgument("unsupported number of variables");
}

LaurentPoly::LaurentPoly(const Exponent& e, QRat c) : n_(e.size()) {
  if (!c.is_zero()) terms_.emplace(e, std::move(c));
}

LaurentPoly LaurentPoly::constant(int n, QRat c) { return LaurentPoly(Exponent(n), std::move(c)); }

LaurentPoly LaurentPoly::variable(int n, int i) {
  Exponent e(n);
  e[i] = 1;
  return LaurentPoly(e);
}

QRat LaurentPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? QRat() : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const QRat& c) {
  if (c.is_zero()) return;
  if (e.size() != n_) throw InvalidArgument("exponent length does not match polynomial");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
  if (o.n_ != n_) throw InvalidArgument("polynomials in different numbers of variables");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const QRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, x] : r.terms_) x = -x;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same(b);
  LaurentPoly r(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exponent& e) const {
  LaurentPoly r(n_);
  for (const auto& [x, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), x + e, c);
  return r;
}

LaurentPoly LaurentPoly::map_coeffs(const std::function<QRat(const QRat&)>& fn) const {
  LaurentPoly r(n_);
  for (const auto& [e, c] : terms_) {
    QRat v = fn(c);
    if (!v.is_zero()) r.terms_.emplace_hint(r.terms_.end(), e, std::move(v));
  }
  return r;
}

bool LaurentPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.weight();
  for (const auto& [e, c] : terms_)
    if (e.weight() != d) return false;
  return true;
}

int LaurentPoly::degree() const { return terms_.empty() ? 0 : terms_.begin()->first.weight(); }

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool constant_monomial = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    std::string mono = constant_monomial ? "" : "x^{" + e.compact() + "}";
    std::string coeff;
    bool negative = false;
    if (c.needs_parens()) {
      coeff = "(" + c.to_string() + ")";
    } else {
      coeff = c.to_string();
      if (coeff[0] == '-') {
        negative = true;
        coeff.erase(0, 1);
      }
    }
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    if (mono.empty()) {
      os << coeff;
    } else {
      if (coeff != "1") os << coeff << "·";
      os << mono;
    }
    first = false;
  }
  return os.str();
}

LaurentPoly scale(const LaurentPoly& f, const QRat& c) { return f * c; }

LaurentPoly swap_vars(const LaurentPoly& f, int i) {
  if (i < 1 || i >= f.nvars()) throw InvalidArgument("swap index out of range");
  LaurentPoly r(f.nvars());
  for (const auto& [e, c] : f) {
    Exponent s = e;
    std::swap(s[i - 1], s[i]);
    r.add_term(s, c);
  }
  return r;
}

LaurentPoly club(const LaurentPoly& f) {
  LaurentPoly r(f.nvars());
  for (const auto& [e, c] : f) r.add_term(-e.reversed(), c);
  return r;
}

std::vector<std::pair<Exponent, QRat>> leading_terms(const LaurentPoly& f) {
  if (f.is_zero()) throw InvalidArgument("leading terms of the zero polynomial");
  std::vector<std::pair<Exponent, QRat>> out;
  for (const auto& [e, c] : f) {
    bool maximal = true;
    for (const auto& [o, d] : f) {
      if (compare_order(e, o) == Order::Less) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.emplace_back(e, c);
  }
  return out;
}

LaurentPoly specialize_q(const LaurentPoly& f, const Rational& q0) {
  LaurentPoly r(f.nvars());
  for (const auto& [e, c] : f) {
    try {
      r.add_term(e, QRat(c.eval(q0)));
    } catch (const Pole& p) {
      throw Pole(std::string(p.what()) + " (coefficient of x^{" + e.compact() + "})");
    }
  }
  return r;
}

}  // namespace qkey
