#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace qkey::testing {

LaurentPoly poly(int n, const std::vector<std::pair<Exponent, QRat>>& terms) {
  LaurentPoly f(n);
  for (const auto& [e, c] : terms) f.add_term(e, c);
  return f;
}

LaurentPoly permute_vars(const LaurentPoly& f, const Permutation& sigma) {
  LaurentPoly out(f.nvars());
  for (const auto& [e, c] : f) {
    Exponent g(e.size());
    for (int i = 0; i < e.size(); ++i) g[sigma(i + 1) - 1] = e[i];
    out.add_term(g, c);
  }
  return out;
}

int sign(const Permutation& sigma) {
  int inv = 0;
  for (int i = 1; i <= sigma.size(); ++i)
    for (int j = i + 1; j <= sigma.size(); ++j)
      if (sigma(i) > sigma(j)) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

LaurentPoly antisymmetrize(const LaurentPoly& f) {
  LaurentPoly out(f.nvars());
  for (const auto& w : all_permutations(f.nvars())) out += permute_vars(f, w) * QRat(sign(w));
  return out;
}

LaurentPoly vandermonde(int n) {
  LaurentPoly v = LaurentPoly::constant(n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) v = v * (LaurentPoly::variable(n, i) - LaurentPoly::variable(n, j));
  return v;
}

bool is_symmetric(const LaurentPoly& f) {
  for (int i = 1; i < f.nvars(); ++i)
    if (swap_vars(f, i) != f) return false;
  return true;
}

LaurentPoly schur_tableaux(const Partition& lambda, int n) {
  // Fill the diagram row by row; rows weakly increase, columns strictly.
  const auto& rows = lambda.parts();
  std::vector<std::vector<int>> t;
  for (int r : rows) t.emplace_back(r, 0);
  LaurentPoly out(n);
  std::function<void(size_t, size_t)> fill = [&](size_t r, size_t c) {
    if (r == rows.size()) {
      Exponent e(n);
      for (const auto& row : t)
        for (int x : row) ++e[x];
      out.add_term(e, 1);
      return;
    }
    if (c == t[r].size()) return fill(r + 1, 0);
    int lo = c > 0 ? t[r][c - 1] : 0;
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int x = lo; x < n; ++x) {
      t[r][c] = x;
      fill(r, c + 1);
    }
  };
  if (lambda.length() <= n) fill(0, 0);
  return out;
}

LaurentPoly monomial_symmetric(const Partition& lambda, int n) {
  LaurentPoly out(n);
  for (const auto& v : orbit(lambda.padded(n))) out.add_term(v, 1);
  return out;
}

LaurentPoly hl_symmetrized_numerator(const Partition& lambda, int n) {
  LaurentPoly f(lambda.padded(n), 1);
  const QRat q = QRat::q();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) f = f * (LaurentPoly::variable(n, i) - LaurentPoly::variable(n, j) * q);
  return antisymmetrize(f);
}

namespace {

// q_r = sum over compositions a of r into N parts of (1-q)^{#nonzero parts} x^a.
LaurentPoly one_row(int r, int nvars) {
  LaurentPoly out(nvars);
  if (r < 0) return out;
  Exponent e(nvars);
  const QRat one_minus_q = QRat(1) - QRat::q();
  std::function<void(int, int, int)> rec = [&](int pos, int rest, int nonzero) {
    if (pos == nvars - 1) {
      e[pos] = rest;
      out.add_term(e, one_minus_q.pow(nonzero + (rest > 0 ? 1 : 0)));
      return;
    }
    for (int a = 0; a <= rest; ++a) {
      e[pos] = a;
      rec(pos + 1, rest - a, nonzero + (a > 0 ? 1 : 0));
    }
  };
  rec(0, r, 0);
  return out;
}

}  // namespace

LaurentPoly raising_Q(const std::vector<int>& u, int nvars) {
  const int n = static_cast<int>(u.size());
  int bound = 0, suffix = 0;
  for (int k = n - 1; k >= 0; --k) bound = std::max(bound, suffix += u[k]);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::map<int, LaurentPoly> rows;
  auto row = [&](int r) -> const LaurentPoly& {
    auto it = rows.find(r);
    if (it == rows.end()) it = rows.emplace(r, one_row(r, nvars)).first;
    return it->second;
  };
  // Collect the coefficient of each raised index first, then multiply out.
  std::map<std::vector<int>, QRat> raised;
  const QRat q = QRat::q();
  std::vector<int> v = u;
  std::function<void(size_t, QRat)> rec = [&](size_t p, QRat c) {
    if (p == pairs.size()) {
      if (std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; })) raised[v] += c;
      return;
    }
    auto [i, j] = pairs[p];
    for (int k = 0; k <= bound; ++k) {
      v[i] += k;
      v[j] -= k;
      rec(p + 1, k == 0 ? c : c * (q.pow(k) - q.pow(k - 1)));
      v[i] -= k;
      v[j] += k;
    }
  };
  rec(0, QRat(1));
  LaurentPoly out(nvars);
  for (const auto& [w, c] : raised) {
    if (c.is_zero()) continue;
    LaurentPoly term = LaurentPoly::constant(nvars, c);
    for (int r : w) term = term * row(r);
    out += term;
  }
  return out;
}

LaurentPoly expansion_poly(const HLExpansion& e, int nvars) {
  LaurentPoly out(nvars);
  for (const auto& [p, c] : e) out += raising_Q(p.parts(), nvars) * c;
  return out;
}

Exponent random_vector(int n, int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(lo, hi);
  Exponent e(n);
  for (int k = 0; k < n; ++k) e[k] = d(rng);
  return e;
}

QRat random_qpoly(std::mt19937_64& rng, int max_degree, int range) {
  std::uniform_int_distribution<int> deg(0, max_degree), co(-range, range);
  std::vector<Integer> c(deg(rng) + 1);
  for (auto& x : c) x = co(rng);
  return QRat(ZPoly(std::move(c)));
}

QRat random_qrat(std::mt19937_64& rng) {
  for (;;) {
    QRat num = random_qpoly(rng, 3, 4), den = random_qpoly(rng, 2, 3);
    if (!num.is_zero() && !den.is_zero()) return num / den;
  }
}

}  // namespace qkey::testing
