#include "qkey/hecke.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <tuple>

#include "qkey/error.hpp"

namespace qkey {

HeckeElt::HeckeElt(const Permutation& sigma, QRat c) : n_(sigma.size()) {
  if (!c.is_zero()) terms_.emplace(sigma, std::move(c));
}

QRat HeckeElt::coeff(const Permutation& sigma) const {
  auto it = terms_.find(sigma);
  return it == terms_.end() ? QRat() : it->second;
}

void HeckeElt::add_term(const Permutation& sigma, const QRat& c) {
  if (c.is_zero()) return;
  if (sigma.size() != n_) throw InvalidArgument("permutation not in S_n");
  auto [it, inserted] = terms_.try_emplace(sigma, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  if (o.n_ != n_) throw InvalidArgument("Hecke elements of different rank");
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  if (o.n_ != n_) throw InvalidArgument("Hecke elements of different rank");
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

HeckeElt& HeckeElt::operator*=(const QRat& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [s, x] : terms_) x *= c;
  return *this;
}

std::string HeckeElt::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << " + ";
    if (!c.is_one()) os << (c.needs_parens() ? "(" + c.to_string() + ")" : c.to_string()) << "·";
    os << "T" << s.to_string();
    first = false;
  }
  return os.str();
}

HeckeElt mul_by_Ti(const HeckeElt& h, int i) {
  if (i < 1 || i >= h.n()) throw InvalidArgument("generator index out of range");
  HeckeElt r(h.n());
  const QRat q = QRat::q();
  const QRat qm1 = q - 1;
  for (const auto& [s, c] : h.terms()) {
    Permutation t = s.times_simple(i);
    if (s.ascends_at(i)) {
      r.add_term(t, c);
    } else {
      r.add_term(t, c * q);
      r.add_term(s, c * qm1);
    }
  }
  return r;
}

HeckeElt mul(const HeckeElt& a, const HeckeElt& b) {
  if (a.n() != b.n()) throw InvalidArgument("Hecke elements of different rank");
  HeckeElt r(a.n());
  for (const auto& [s, c] : b.terms()) {
    HeckeElt t = a;
    for (int i : s.reduced_word()) t = mul_by_Ti(t, i);
    r += t * c;
  }
  return r;
}

HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) { return mul(a, b); }

HeckeElt phi(const HeckeElt& h) {
  HeckeElt r(h.n());
  for (const auto& [s, c] : h.terms()) r.add_term(s.inverse(), c);
  return r;
}

namespace {

// omega_coeff[sigma][tau] = coefficient of T_omega in T_sigma T_tau.
struct OmegaTable {
  std::map<Permutation, std::map<Permutation, QRat>> omega_coeff;
};

const OmegaTable& omega_table(int n) {
  static std::shared_mutex mu;
  static std::map<int, std::unique_ptr<OmegaTable>> cache;
  {
    std::shared_lock lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  auto table = std::make_unique<OmegaTable>();
  const Permutation w0 = Permutation::longest(n);
  const auto perms = all_permutations(n);
  for (const auto& s : perms) {
    auto& row = table->omega_coeff[s];
    for (const auto& t : perms) {
      if (s.length() + t.length() < w0.length()) continue;
      QRat c = mul(HeckeElt(s), HeckeElt(t)).coeff(w0);
      if (!c.is_zero()) row.emplace(t, std::move(c));
    }
  }
  std::unique_lock lock(mu);
  auto [it, inserted] = cache.try_emplace(n, std::move(table));
  return *it->second;
}

}  // namespace

QRat bilinear(const HeckeElt& a, const HeckeElt& b) {
  if (a.n() != b.n()) throw InvalidArgument("Hecke elements of different rank");
  const OmegaTable& table = omega_table(a.n());
  HeckeElt pb = phi(b);
  QRat total;
  for (const auto& [s, c] : a.terms()) {
    const auto& row = table.omega_coeff.at(s);
    QRat inner;
    for (const auto& [t, d] : pb.terms()) {
      auto it = row.find(t);
      if (it != row.end()) inner += d * it->second;
    }
    if (!inner.is_zero()) total += c * inner;
  }
  return total;
}

QRat yb_shift(YBVariant variant, int k) {
  if (k < 1) throw InvalidArgument("Yang-Baxter step requires k >= 1");
  if (variant == YBVariant::Plain) return q_int(k).inverse();
  return -(QRat::q().pow(k) / q_int(k));
}

namespace {

HeckeElt extend(const HeckeElt& y, const Permutation& sigma, int i, YBVariant variant) {
  int k = sigma(i + 1) - sigma(i);
  return mul_by_Ti(y, i) + y * yb_shift(variant, k);
}

}  // namespace

HeckeElt yang_baxter_along(int n, const std::vector<int>& word, YBVariant variant) {
  Permutation sigma = Permutation::identity(n);
  HeckeElt y = HeckeElt::one(n);
  for (int i : word) {
    if (!sigma.ascends_at(i)) throw InvalidArgument("word is not reduced");
    y = extend(y, sigma, i, variant);
    sigma = sigma.times_simple(i);
  }
  return y;
}

HeckeElt yang_baxter(const Permutation& sigma, YBVariant variant) {
  static std::shared_mutex mu;
  static std::map<std::pair<int, Permutation>, HeckeElt> cache;
  const auto key = std::make_pair(static_cast<int>(variant), sigma);
  {
    std::shared_lock lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  HeckeElt y;
  auto word = sigma.reduced_word();
  if (word.empty()) {
    y = HeckeElt::one(sigma.size());
  } else {
    int i = word.back();
    Permutation prev = sigma.times_simple(i);
    y = extend(yang_baxter(prev, variant), prev, i, variant);
  }
  std::unique_lock lock(mu);
  cache.try_emplace(key, y);
  return y;
}

QMatrix yb_transition_matrix(int n, YBVariant variant) {
  const auto perms = all_permutations(n);
  QMatrix m;
  for (const auto& p : perms) {
    m.row_labels.push_back(p.images());
    m.col_labels.push_back(p.images());
  }
  m.entries.assign(perms.size(), std::vector<QRat>(perms.size()));
  for (size_t c = 0; c < perms.size(); ++c) {
    HeckeElt y = yang_baxter(perms[c], variant);
    for (size_t r = 0; r < perms.size(); ++r) m.entries[r][c] = y.coeff(perms[r]);
  }
  return m;
}

QMatrix yb_duality_matrix(int n) {
  const auto perms = all_permutations(n);
  const Permutation omega = Permutation::longest(n);
  QMatrix m;
  for (const auto& s : perms) {
    m.row_labels.push_back(s.images());
    m.col_labels.push_back(s.images());
  }
  m.entries.assign(perms.size(), std::vector<QRat>(perms.size()));
  for (size_t a = 0; a < perms.size(); ++a) {
    const HeckeElt y = yang_baxter(perms[a], YBVariant::Plain);
    for (size_t b = 0; b < perms.size(); ++b)
      m.entries[a][b] = bilinear(y, yang_baxter(compose(omega, perms[b]), YBVariant::Hat));
  }
  return m;
}

}  // namespace qkey
