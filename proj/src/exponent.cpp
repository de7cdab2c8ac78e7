#include "qkey/exponent.hpp"

#include <algorithm>

#include "qkey/error.hpp"

namespace qkey {

namespace {

int checked_size(size_t n) {
  if (n > static_cast<size_t>(kMaxVars))
    throw InvalidArgument("at most " + std::to_string(kMaxVars) + " variables are supported");
  return static_cast<int>(n);
}

}  // namespace

Exponent::Exponent(int n) : n_(checked_size(n < 0 ? 0 : n)) {}

Exponent::Exponent(std::initializer_list<int> v) : n_(checked_size(v.size())) {
  std::copy(v.begin(), v.end(), v_.begin());
}

Exponent::Exponent(std::span<const int> v) : n_(checked_size(v.size())) {
  std::copy(v.begin(), v.end(), v_.begin());
}

int Exponent::weight() const {
  int s = 0;
  for (int x : *this) s += x;
  return s;
}

bool Exponent::is_nonnegative() const {
  return std::all_of(begin(), end(), [](int x) { return x >= 0; });
}

bool Exponent::is_dominant() const {
  for (int i = 1; i < n_; ++i)
    if (v_[i] > v_[i - 1]) return false;
  return true;
}

Exponent Exponent::reversed() const {
  Exponent r = *this;
  std::reverse(r.begin(), r.end());
  return r;
}

Exponent Exponent::sorted_desc() const {
  Exponent r = *this;
  std::sort(r.begin(), r.end(), std::greater<>());
  return r;
}

Exponent& Exponent::operator+=(const Exponent& o) {
  if (o.n_ != n_) throw InvalidArgument("exponent length mismatch");
  for (int i = 0; i < n_; ++i) v_[i] += o.v_[i];
  return *this;
}

Exponent& Exponent::operator-=(const Exponent& o) {
  if (o.n_ != n_) throw InvalidArgument("exponent length mismatch");
  for (int i = 0; i < n_; ++i) v_[i] -= o.v_[i];
  return *this;
}

Exponent Exponent::operator-() const {
  Exponent r = *this;
  for (int& x : r) x = -x;
  return r;
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (int i = 0; i < a.n_; ++i)
    if (a.v_[i] != b.v_[i]) return a.v_[i] <=> b.v_[i];
  return std::strong_ordering::equal;
}

std::string Exponent::compact() const {
  bool digits = std::all_of(begin(), end(), [](int x) { return x >= 0 && x <= 9; });
  std::string s;
  for (int i = 0; i < n_; ++i) {
    if (!digits && i > 0) s += ',';
    s += std::to_string(v_[i]);
  }
  return s;
}

size_t ExponentHash::operator()(const Exponent& e) const noexcept {
  size_t h = static_cast<size_t>(e.size());
  for (int x : e) h = h * 1000003u ^ static_cast<size_t>(static_cast<unsigned>(x) + 0x9e3779b9u);
  return h;
}

Order compare_order(const Exponent& u, const Exponent& v) {
  if (u.size() != v.size()) throw InvalidArgument("exponent length mismatch");
  bool all_ge = true, all_le = true;  // suffix sums of v - u
  long s = 0;
  for (int k = u.size() - 1; k >= 0; --k) {
    s += v[k] - u[k];
    if (s < 0) all_ge = false;
    if (s > 0) all_le = false;
  }
  if (all_ge && all_le) return Order::Equal;
  if (all_ge) return Order::Less;
  if (all_le) return Order::Greater;
  return Order::Incomparable;
}

bool rtl_lex_less(const Exponent& u, const Exponent& v) {
  for (int k = u.size() - 1; k >= 0; --k)
    if (u[k] != v[k]) return u[k] < v[k];
  return false;
}

long n_stat(const Exponent& v) {
  long s = 0;
  for (int i = 0; i < v.size(); ++i) s += static_cast<long>(i) * v[i];
  return s;
}

bool has_nonnegative_suffix_sums(const Exponent& v) {
  long s = 0;
  for (int k = v.size() - 1; k >= 0; --k) {
    s += v[k];
    if (s < 0) return false;
  }
  return true;
}

}  // namespace qkey
