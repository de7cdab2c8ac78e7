#include "qkey/hall.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "qkey/error.hpp"
#include "qkey/operators.hpp"

namespace qkey {

Partition::Partition(std::span<const int> parts) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw InvalidArgument("partition with a negative part");
    if (i > 0 && parts[i] > parts[i - 1]) throw InvalidArgument("parts must be weakly decreasing");
    if (parts[i] > 0) parts_.push_back(parts[i]);
  }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::span<const int>(parts.begin(), parts.size())) {}

int Partition::weight() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

Exponent Partition::padded(int n) const {
  if (length() > n) throw InvalidArgument("partition " + to_string() + " has more than n parts");
  Exponent e(n);
  for (int i = 0; i < length(); ++i) e[i] = parts_[i];
  return e;
}

std::map<int, int> Partition::multiplicities(int n) const {
  std::map<int, int> m;
  for (int p : parts_) ++m[p];
  m[0] = n - length();
  return m;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (int i = 0; i < length(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::string to_string(const HLExpansion& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lam, c] : e) {
    std::string coeff = c.needs_parens() ? "(" + c.to_string() + ")" : c.to_string();
    bool negative = !c.needs_parens() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    bool digits = std::all_of(lam.parts().begin(), lam.parts().end(), [](int p) { return p <= 9; });
    std::string label;
    for (int p : lam.parts()) label += (!digits && !label.empty() ? "," : "") + std::to_string(p);
    if (coeff != "1") os << coeff << "·";
    os << "Q_{" << label << "}";
    first = false;
  }
  return os.str();
}

// --- Hall-Littlewood polynomials -------------------------------------------

LaurentPoly hl_P(const Partition& lambda, int n) {
  static std::shared_mutex mu;
  static std::map<std::pair<Partition, int>, LaurentPoly> cache;
  const auto key = std::make_pair(lambda, n);
  {
    std::shared_lock lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Exponent lam = lambda.padded(n);
  LaurentPoly f = q_vandermonde(n).shifted(lam);
  LaurentPoly p = apply_partial_omega(f) * d_lambda(lam.span(), n).inverse();
  std::unique_lock lock(mu);
  cache.try_emplace(key, p);
  return p;
}

QRat hl_b(const Partition& lambda) {
  QRat b = 1;
  for (const auto& [part, m] : lambda.multiplicities(lambda.length())) {
    if (part == 0) continue;
    for (int j = 1; j <= m; ++j) b *= QRat(ZPoly(1) - ZPoly::monomial(1, j));
  }
  return b;
}

LaurentPoly hl_Q(const Partition& lambda, int n) { return hl_P(lambda, n) * hl_b(lambda); }

// --- Straightening ---------------------------------------------------------

namespace {

using ZExpansion = std::map<Partition, ZPoly, std::greater<>>;
using ZExpansionPtr = std::shared_ptr<const ZExpansion>;

long default_fuel() {
  static const long fuel = [] {
    if (const char* env = std::getenv("QKEY_FUEL")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && v > 0) return v;
    }
    return 1000000L;
  }();
  return fuel;
}

class StraightenCache {
 public:
  ZExpansionPtr find(const Exponent& u) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(u);
    return it == map_.end() ? nullptr : it->second;
  }
  ZExpansionPtr insert(const Exponent& u, ZExpansionPtr e) {
    std::unique_lock lock(mu_);
    return map_.try_emplace(u, std::move(e)).first->second;
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<Exponent, ZExpansionPtr, ExponentHash> map_;
};

StraightenCache& cache() {
  static StraightenCache c;
  return c;
}

void accumulate(ZExpansion& into, const ZExpansion& from, const ZPoly& factor) {
  for (const auto& [lam, c] : from) {
    auto [it, inserted] = into.try_emplace(lam, c * factor);
    if (!inserted) {
      it->second += c * factor;
      if (it->second.is_zero()) into.erase(it);
    }
  }
}

int rightmost_ascent(const Exponent& u) {
  for (int i = u.size() - 2; i >= 0; --i)
    if (u[i] < u[i + 1]) return i;
  return -1;
}

ZExpansionPtr straighten(const Exponent& u, long& fuel);

// Littlewood's three-term rule at the ascent (i, i+1). When b = a + 1 the first
// term is Q_u itself and the other two coincide, giving Q_u = q Q_(..,b,a,..).
ZExpansion rewrite_at(const Exponent& u, int i, long& fuel) {
  if (--fuel < 0) throw InternalError("straightening exceeded its rewrite budget");
  const int a = u[i], b = u[i + 1];
  const ZPoly q = ZPoly::q();
  ZExpansion r;
  Exponent swapped = u;
  swapped[i] = b;
  swapped[i + 1] = a;
  if (b == a + 1) {
    accumulate(r, *straighten(swapped, fuel), q);
    return r;
  }
  Exponent first = u, third = u;
  first[i] = b - 1;
  first[i + 1] = a + 1;
  third[i] = a + 1;
  third[i + 1] = b - 1;
  accumulate(r, *straighten(first, fuel), ZPoly(-1));
  accumulate(r, *straighten(swapped, fuel), q);
  accumulate(r, *straighten(third, fuel), q);
  return r;
}

ZExpansionPtr straighten(const Exponent& u, long& fuel) {
  if (auto hit = cache().find(u)) return hit;
  auto r = std::make_shared<ZExpansion>();
  const int n = u.size();
  if (n > 0 && u[n - 1] < 0) {
    // rule (10): zero
  } else if (u.is_dominant()) {
    r->emplace(Partition(u.span()), ZPoly(1));
  } else {
    *r = rewrite_at(u, rightmost_ascent(u), fuel);
  }
  return cache().insert(u, std::move(r));
}

HLExpansion to_hl(const ZExpansion& z) {
  HLExpansion e;
  for (const auto& [lam, c] : z) e.emplace(lam, QRat(c));
  return e;
}

}  // namespace

HLExpansion straighten_Q(const Exponent& u) {
  long fuel = default_fuel();
  return to_hl(*straighten(u, fuel));
}

HLExpansion straighten_Q_at(const Exponent& u, int i) {
  if (i < 0 || i + 1 >= u.size() || u[i] >= u[i + 1])
    throw InvalidArgument("no ascent at the requested position");
  long fuel = default_fuel();
  return to_hl(rewrite_at(u, i, fuel));
}

QRat q_at_zero(const Exponent& u) {
  if (u.weight() != 0 || !has_nonnegative_suffix_sums(u)) return QRat();
  long fuel = default_fuel();
  auto e = straighten(u, fuel);
  auto it = e->find(Partition());
  return it == e->end() ? QRat() : QRat(it->second);
}

// --- Leading partition prediction ----------------------------------------

namespace {

long floor_div(long a, long b) {
  long d = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
  return d;
}

}  // namespace

Partition max_partition_below(const Exponent& u) {
  if (!has_nonnegative_suffix_sums(u)) throw InvalidArgument("vector has a negative suffix sum");
  const int n = u.size();
  if (n == 0) return {};
  std::vector<long> suffix(n + 1, 0);
  for (int k = n - 1; k >= 0; --k) suffix[k] = suffix[k + 1] + u[k];
  const long total = suffix[0];
  std::vector<int> v(n, 0);
  long s = 0;  // sum of v[k+1..n-1]
  // Choose v[n-1], ..., v[1] as large as possible while the remaining
  // positions can still be completed: v[1..k-1] = v[k] and v[0] takes the rest.
  for (int k = n - 1; k >= 1; --k) {
    long x = floor_div(total - s, k + 1);
    for (int j = k; j >= 1; --j) x = std::min(x, floor_div(suffix[j] - s, k - j + 1));
    v[k] = static_cast<int>(x);
    s += x;
  }
  v[0] = static_cast<int>(total - s);
  return Partition(std::span<const int>(v));
}

std::optional<Partition> p_of(const Exponent& u) {
  if (!has_nonnegative_suffix_sums(u)) return std::nullopt;
  const int n = u.size();
  if (n <= 1) return Partition(u.span());
  Exponent tail(std::span<const int>(u.begin() + 1, u.end()));
  if (tail.is_dominant() && tail[n - 2] >= 0) return max_partition_below(u);
  // replace the tail by its own prediction, then recurse
  auto pt = p_of(tail);
  Exponent w = u;
  Exponent padded = pt->padded(n - 1);
  for (int k = 1; k < n; ++k) w[k] = padded[k - 1];
  return p_of(w);
}

std::vector<Partition> partitions_of(int d, int max_len) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.emplace_back(std::span<const int>(cur));
      return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  if (d >= 0) rec(rec, d, d);
  return out;
}

std::optional<Partition> p_of_lattice(const Exponent& u) {
  if (!has_nonnegative_suffix_sums(u)) return std::nullopt;
  const int n = u.size();
  std::vector<Exponent> below;
  for (const auto& p : partitions_of(u.weight(), n)) {
    Exponent v = p.padded(n);
    Order o = compare_order(v, u);
    if (o == Order::Less || o == Order::Equal) below.push_back(v);
  }
  std::vector<Exponent> maximal;
  for (const auto& v : below) {
    bool is_max = std::none_of(below.begin(), below.end(),
                               [&](const Exponent& w) { return compare_order(v, w) == Order::Less; });
    if (is_max) maximal.push_back(v);
  }
  if (maximal.size() != 1) throw InternalError("no unique maximal partition below " + u.compact());
  return Partition(maximal.front().span());
}

std::vector<TopTerm> top_terms(const HLExpansion& e) {
  if (e.empty()) throw InvalidArgument("top term of a zero expansion");
  int len = 1;
  for (const auto& [lam, c] : e) len = std::max(len, lam.length());
  std::vector<TopTerm> out;
  for (const auto& [lam, c] : e) {
    Exponent v = lam.padded(len);
    bool maximal = std::none_of(e.begin(), e.end(), [&](const auto& kv) {
      return compare_order(v, kv.first.padded(len)) == Order::Less;
    });
    if (!maximal) continue;
    ZPoly lead_num = ZPoly::monomial(c.num().leading(), 0);
    QRat top(lead_num, ZPoly(c.den().leading()));
    top *= QRat::q().pow(c.num().degree() - c.den().degree());
    out.push_back({lam, top});
  }
  return out;
}

TopTerm top_term(const HLExpansion& e) {
  auto t = top_terms(e);
  if (t.size() != 1) throw InternalError("expansion has several leading partitions");
  return t.front();
}

std::string check_topterm_prediction(const Exponent& u) {
  HLExpansion e = straighten_Q(u);
  auto p = p_of(u);
  auto pl = p_of_lattice(u);
  if (p != pl) return "recursive and lattice predictions differ for " + u.compact();
  if (!p) return e.empty() ? "" : "Q_" + u.compact() + " should vanish";
  if (e.empty()) return "Q_" + u.compact() + " vanished unexpectedly";
  auto tops = top_terms(e);
  if (tops.size() != 1) return "several leading partitions for " + u.compact();
  QRat expected = QRat::q().pow(static_cast<int>(n_stat(u) - n_stat(p->padded(u.size()))));
  if (tops.front().partition != *p) return "leading partition mismatch for " + u.compact();
  if (tops.front().coeff != expected)
    return "top coefficient " + tops.front().coeff.to_string() + " != " + expected.to_string() +
           " for " + u.compact();
  return "";
}

namespace {

void record(TopTermSweep& s, const Exponent& u) {
  ++s.checked;
  if (!p_of(u)) ++s.vanishing;
  std::string msg = check_topterm_prediction(u);
  if (!msg.empty()) s.failures.push_back(std::move(msg));
}

}  // namespace

TopTermSweep sweep_topterm_box(int n, int lo, int hi) {
  if (n < 1 || n > kMaxVars || lo > hi) throw InvalidArgument("bad sweep range");
  TopTermSweep s;
  Exponent u(n);
  for (int k = 0; k < n; ++k) u[k] = lo;
  for (;;) {
    record(s, u);
    int k = n - 1;
    while (k >= 0 && u[k] == hi) u[k--] = lo;
    if (k < 0) break;
    ++u[k];
  }
  return s;
}

TopTermSweep sweep_topterm_random(int n, int lo, int hi, int trials, std::uint64_t seed) {
  if (n < 1 || n > kMaxVars || lo > hi) throw InvalidArgument("bad sweep range");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(lo, hi);
  TopTermSweep s;
  for (int t = 0; t < trials; ++t) {
    Exponent u(n);
    for (int k = 0; k < n; ++k) u[k] = d(rng);
    record(s, u);
  }
  return s;
}

}  // namespace qkey
