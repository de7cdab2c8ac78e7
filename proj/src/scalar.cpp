#include "qkey/scalar.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "qkey/error.hpp"
#include "qkey/operators.hpp"
#include "qkey/perm.hpp"
#include "qkey/qkey.hpp"

namespace qkey {

namespace {

void require_same_n(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.nvars() != g.nvars()) throw InvalidArgument("scalar product of polynomials in different variables");
}

// Runs fn(0..count-1) on a few threads; each index is handled exactly once.
template <class Fn>
void parallel_for(size_t count, Fn&& fn) {
  const size_t workers = std::min<size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t k = next++; k < count; k = next++) {
        try {
          fn(k);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

using Series = std::vector<Rational>;

// Theta truncated at q-degree cap: exponent -> coefficients of q^0..q^cap.
using ThetaMap = std::map<Exponent, std::vector<Integer>>;

ThetaMap theta_truncated(int n, int cap) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, ThetaMap> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({n, cap});
    if (it != cache.end()) return it->second;
  }
  ThetaMap cur;
  cur[Exponent(n)] = std::vector<Integer>(cap + 1);
  cur[Exponent(n)][0] = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // (1 - t) sum_k q^k t^k = sum_k q^k (t^k - t^(k+1)), t = x_i / x_j
      ThetaMap next;
      for (const auto& [e, s] : cur) {
        int low = 0;
        while (low <= cap && s[low] == 0) ++low;
        for (int k = 0; low + k <= cap; ++k) {
          for (int eps = 0; eps < 2; ++eps) {
            Exponent f = e;
            f[i] += k + eps;
            f[j] -= k + eps;
            auto& t = next.try_emplace(f, std::vector<Integer>(cap + 1)).first->second;
            for (int d = low; d + k <= cap; ++d) {
              if (eps == 0) t[d + k] += s[d];
              else t[d + k] -= s[d];
            }
          }
        }
      }
      std::erase_if(next, [](const auto& kv) {
        return std::all_of(kv.second.begin(), kv.second.end(), [](const Integer& c) { return c == 0; });
      });
      cur = std::move(next);
    }
  }
  std::lock_guard lock(mu);
  return cache.try_emplace({n, cap}, std::move(cur)).first->second;
}

QRat from_series(const Series& s) {
  Integer l = 1;
  for (const auto& c : s) l = lcm(l, Integer(c.get_den()));
  std::vector<Integer> coeffs;
  for (const auto& c : s) coeffs.push_back(Integer(c * l));
  return QRat(ZPoly(std::move(coeffs)), ZPoly(l));
}

}  // namespace

QRat scalar_q(const LaurentPoly& f, const LaurentPoly& g) {
  require_same_n(f, g);
  QRat total;
  for (const auto& [u, c] : f) {
    for (const auto& [v, d] : g) {
      Exponent w = u - v.reversed();
      if (w.weight() != 0 || !has_nonnegative_suffix_sums(w)) continue;
      QRat z = q_at_zero(w);
      if (!z.is_zero()) total += c * d * z;
    }
  }
  return total;
}

QRat scalar_0(const LaurentPoly& f, const LaurentPoly& g) {
  return QRat(scalar_q(f, g).eval(Rational(0)));
}

QRat ct_oracle(const LaurentPoly& f, const LaurentPoly& g, int qcap) {
  require_same_n(f, g);
  if (qcap < 0) throw InvalidArgument("qcap must be nonnegative");
  const ThetaMap theta = theta_truncated(f.nvars(), qcap);
  Series total(qcap + 1);
  for (const auto& [u, c] : f) {
    for (const auto& [v, d] : g) {
      auto it = theta.find(-(u - v.reversed()));
      if (it == theta.end()) continue;
      Series cd = (c * d).series(qcap + 1);
      for (int a = 0; a <= qcap; ++a) {
        if (cd[a] == 0) continue;
        for (int b = 0; a + b <= qcap; ++b) total[a + b] += cd[a] * it->second[b];
      }
    }
  }
  return from_series(total);
}

CtStable ct_oracle_stable(const LaurentPoly& f, const LaurentPoly& g, int start, int max_cap) {
  CtStable out;
  out.qcap = std::max(start, 0);
  out.value = ct_oracle(f, g, out.qcap);
  while (out.qcap < max_cap) {
    QRat next = ct_oracle(f, g, out.qcap + 1);
    ++out.qcap;
    if (next == out.value) {
      out.stable = true;
      return out;
    }
    out.value = next;
  }
  return out;
}

bool agree_mod_q(const QRat& a, const QRat& b, int cap) {
  return a.series(cap + 1) == b.series(cap + 1);
}

namespace {

ScalarReport gram_report(const std::vector<Exponent>& left, const std::vector<Exponent>& right, int n,
                         const std::function<QRat(const Exponent&, const Exponent&)>& cell,
                         const std::function<bool(size_t, size_t, const QRat&)>& expected) {
  ScalarReport r;
  r.n = n;
  for (const auto& v : left) r.gram.row_labels.push_back(v.to_vector());
  for (const auto& u : right) r.gram.col_labels.push_back(u.to_vector());
  r.gram.entries.assign(left.size(), std::vector<QRat>(right.size()));
  parallel_for(left.size() * right.size(), [&](size_t k) {
    const size_t a = k / right.size(), b = k % right.size();
    r.gram.entries[a][b] = cell(left[a], right[b]);
  });
  r.pass = true;
  for (size_t a = 0; a < left.size(); ++a)
    for (size_t b = 0; b < right.size(); ++b)
      if (!expected(a, b, r.gram.entries[a][b])) r.pass = false;
  return r;
}

bool is_delta(size_t a, size_t b, const QRat& x) { return a == b ? x.is_one() : x.is_zero(); }

QRat duality_cell(const Exponent& v, const Exponent& u) {
  return scalar_q(u_poly(v), uhat_poly(u.reversed()));
}

}  // namespace

ScalarReport verify_duality(const Partition& lambda, int n) {
  auto orb = orbit(lambda.padded(n));
  for (auto& v : orb) u_poly(v), uhat_poly(v.reversed());  // warm caches in a fixed order
  auto r = gram_report(orb, orb, n, duality_cell, is_delta);
  r.lambda = lambda.padded(n).to_vector();
  return r;
}

ScalarReport verify_duality_weight(int n, int degree) {
  auto idx = weights_of_degree(n, degree);
  return gram_report(idx, idx, n, duality_cell, is_delta);
}

ScalarReport verify_monomial_duality(const Partition& lambda, int n) {
  const Exponent lam = lambda.padded(n);
  auto orb = orbit(lam);
  const Exponent target = lam.reversed();
  auto r = gram_report(
      orb, {lam}, n, [](const Exponent& v, const Exponent& l) { return scalar_q(u_poly(v), LaurentPoly(l)); },
      [&](size_t a, size_t, const QRat& x) { return orb[a] == target ? x.is_one() : x.is_zero(); });
  r.lambda = lam.to_vector();
  return r;
}

namespace {

LaurentPoly random_homogeneous(int n, int degree, int total, int terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> ex(-degree, degree), co(-3, 3), qd(0, 2);
  LaurentPoly f(n);
  for (int t = 0; t < terms; ++t) {
    Exponent e(n);
    for (;;) {
      int s = 0;
      for (int k = 0; k + 1 < n; ++k) s += (e[k] = ex(rng));
      e[n - 1] = total - s;
      if (e[n - 1] >= -degree && e[n - 1] <= degree) break;
    }
    int c = co(rng);
    if (c == 0) c = 1;
    f.add_term(e, QRat(ZPoly::monomial(c, qd(rng))));
  }
  return f;
}

}  // namespace

AdjointReport verify_adjoint_ops(int n, int trials, int degree, std::uint64_t seed) {
  if (n < 2) throw InvalidArgument("adjointness needs n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_i(1, n - 1), pick_total(-degree, degree);
  AdjointReport rep;
  rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const int i = pick_i(rng);
    // Pairs of unequal total degree pair to zero trivially; use a common one.
    const int total = pick_total(rng);
    LaurentPoly f = random_homogeneous(n, degree, total, 3, rng);
    LaurentPoly g = random_homogeneous(n, degree, total, 3, rng);
    if (scalar_q(apply_box(f, i), g) == scalar_q(f, apply_box(g, n - i))) ++rep.box_passed;
    if (scalar_q(apply_nabla(f, i), g) == scalar_q(f, apply_nabla(g, n - i))) ++rep.nabla_passed;
  }
  return rep;
}

namespace {

// Places f's variables at positions offset..offset+n-1 of a 2n-variable ring.
LaurentPoly embed(const LaurentPoly& f, int offset, int total) {
  LaurentPoly out(total);
  for (const auto& [e, c] : f) {
    Exponent x(total);
    for (int k = 0; k < e.size(); ++k) x[offset + k] = e[k];
    out.add_term(x, c);
  }
  return out;
}

LaurentPoly truncate_x_degree(const LaurentPoly& f, int n, int cap) {
  LaurentPoly out(f.nvars());
  for (const auto& [e, c] : f) {
    int d = 0;
    for (int k = 0; k < n; ++k) d += e[k];
    if (d <= cap) out.add_term(e, c);
  }
  return out;
}

}  // namespace

bool verify_cauchy(int n, int degree_cap) {
  if (n < 1 || 2 * n > kMaxVars) throw InvalidArgument("Cauchy check needs 1 <= n <= " + std::to_string(kMaxVars / 2));
  const int m = 2 * n;
  LaurentPoly lhs(m);
  for (int d = 0; d <= degree_cap; ++d)
    for (const auto& u : weights_of_degree(n, d))
      lhs += embed(key_poly(u, KeyVariant::Plain), 0, m) * embed(key_poly(u.reversed(), KeyVariant::Hat), n, m);

  LaurentPoly rhs = LaurentPoly::constant(m, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; i + j <= n - 1; ++j) {
      LaurentPoly geo(m);
      for (int k = 0; k <= degree_cap; ++k) {
        Exponent e(m);
        e[i] = k;
        e[n + j] = k;
        geo.add_term(e, 1);
      }
      rhs = truncate_x_degree(rhs * geo, n, degree_cap);
    }
  }
  return lhs == rhs;
}

std::string check_monomial_vanishing(int n, int max_weight) {
  std::vector<Exponent> dominant;
  for (int d = 0; d <= max_weight; ++d)
    for (const auto& p : partitions_of(d, n)) dominant.push_back(p.padded(n));
  auto nonzero = [](const Exponent& a, const Exponent& b) {
    return !scalar_q(LaurentPoly(a), LaurentPoly(b)).is_zero();
  };
  for (const auto& u : dominant) {
    for (const auto& lambda : dominant) {
      for (const auto& v : orbit(u)) {
        if (!nonzero(v, lambda)) continue;
        for (const auto& mu : orbit(lambda)) {
          if (!nonzero(u, mu)) continue;
          if (u != lambda || v != lambda.reversed() || mu != u.reversed())
            return "u=" + u.compact() + " lambda=" + lambda.compact() + " v=" + v.compact() +
                   " mu=" + mu.compact();
        }
      }
    }
  }
  return "";
}

}  // namespace qkey
