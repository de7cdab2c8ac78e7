#include "qkey/qkey.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "qkey/error.hpp"
#include "qkey/operators.hpp"
#include "qkey/perm.hpp"

namespace qkey {

std::string to_string(FamilyId f) {
  switch (f) {
    case FamilyId::U: return "U";
    case FamilyId::Uhat: return "Uhat";
    case FamilyId::K: return "K";
    case FamilyId::Khat: return "Khat";
    case FamilyId::Monomial: return "M";
    case FamilyId::HL_P: return "P";
  }
  return "?";
}

FamilyId family_from_string(const std::string& s) {
  if (s == "U") return FamilyId::U;
  if (s == "Uhat") return FamilyId::Uhat;
  if (s == "K") return FamilyId::K;
  if (s == "Khat") return FamilyId::Khat;
  if (s == "M" || s == "Monomial") return FamilyId::Monomial;
  if (s == "P" || s == "HL_P") return FamilyId::HL_P;
  throw InvalidArgument("unknown family: " + s);
}

namespace {

void require_weight(const Exponent& v) {
  if (!v.is_nonnegative()) throw InvalidArgument("index " + v.compact() + " has a negative entry");
}

// Per-family memo of computed polynomials; safe for concurrent readers.
class FamilyCache {
 public:
  template <class Fn>
  LaurentPoly get(int tag, const Exponent& v, Fn&& compute) {
    const auto key = std::make_pair(tag, v);
    {
      std::shared_lock lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    LaurentPoly p = compute();
    std::unique_lock lock(mu_);
    return map_.try_emplace(key, std::move(p)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<std::pair<int, Exponent>, LaurentPoly> map_;
};

FamilyCache& family_cache() {
  static FamilyCache c;
  return c;
}

LaurentPoly u_seed(const Exponent& lambda) {
  return LaurentPoly(lambda, d_lambda(lambda.span(), lambda.size()).inverse());
}

}  // namespace

LaurentPoly u_poly(const Exponent& v) {
  require_weight(v);
  return family_cache().get(0, v, [&] {
    return apply_word(u_seed(v.sorted_desc()), yang_baxter_word(zeta(v), YBVariant::Plain));
  });
}

LaurentPoly uhat_poly(const Exponent& v) {
  require_weight(v);
  return family_cache().get(1, v, [&] {
    return apply_word(LaurentPoly(v.sorted_desc()), yang_baxter_word(eta(v), YBVariant::Hat));
  });
}

LaurentPoly u_poly_along(const Exponent& v, const std::vector<int>& word) {
  require_weight(v);
  Permutation z = zeta(v);
  Permutation p = Permutation::identity(v.size());
  for (int i : word) p = p.times_simple(i);
  if (p != z || static_cast<int>(word.size()) != z.length())
    throw InvalidArgument("not a reduced word of zeta(v)");
  return apply_word(u_seed(v.sorted_desc()), yang_baxter_word(v.size(), word, YBVariant::Plain));
}

namespace {

LaurentPoly key_impl(const Exponent& v, KeyVariant variant, bool rightmost) {
  const int tag = 2 + (variant == KeyVariant::Hat ? 1 : 0) + (rightmost ? 2 : 0);
  return family_cache().get(tag, v, [&] {
    if (v.is_dominant()) return LaurentPoly(v);
    int i = -1;
    for (int k = 0; k + 1 < v.size(); ++k) {
      if (v[k] < v[k + 1]) {
        i = k;
        if (!rightmost) break;
      }
    }
    // v = w s_i with w_i > w_{i+1}
    Exponent w = v;
    std::swap(w[i], w[i + 1]);
    LaurentPoly kw = key_impl(w, variant, rightmost);
    return variant == KeyVariant::Plain ? apply_pi(kw, i + 1) : apply_pihat(kw, i + 1);
  });
}

}  // namespace

LaurentPoly key_poly(const Exponent& v, KeyVariant variant) {
  require_weight(v);
  return key_impl(v, variant, false);
}

LaurentPoly key_poly_rightmost(const Exponent& v, KeyVariant variant) {
  require_weight(v);
  return key_impl(v, variant, true);
}

LaurentPoly family_poly(FamilyId family, const Exponent& v) {
  switch (family) {
    case FamilyId::U: return u_poly(v);
    case FamilyId::Uhat: return uhat_poly(v);
    case FamilyId::K: return key_poly(v, KeyVariant::Plain);
    case FamilyId::Khat: return key_poly(v, KeyVariant::Hat);
    case FamilyId::Monomial: return LaurentPoly(v);
    case FamilyId::HL_P:
      if (!v.is_dominant()) throw InvalidArgument("Hall-Littlewood index must be a partition");
      return hl_P(Partition(v.span()), v.size());
  }
  throw InvalidArgument("unknown family");
}

std::vector<Exponent> family_index(FamilyId family, int n, int degree) {
  if (family != FamilyId::HL_P) return weights_of_degree(n, degree);
  std::vector<Exponent> out;
  for (const auto& p : partitions_of(degree, n)) out.push_back(p.padded(n));
  return out;
}

std::map<Exponent, QRat, std::greater<>> expand_in_family(const LaurentPoly& f, FamilyId target,
                                                          int n, int degree) {
  if (f.nvars() != n) throw InvalidArgument("polynomial has the wrong number of variables");
  if (!f.is_homogeneous() || (!f.is_zero() && f.degree() != degree))
    throw InvalidArgument("expansion requires a homogeneous polynomial of degree " +
                         std::to_string(degree));
  std::map<Exponent, Exponent> by_leader;
  for (const auto& w : family_index(target, n, degree))
    by_leader.emplace(target == FamilyId::HL_P ? w.reversed() : w, w);

  std::map<Exponent, QRat, std::greater<>> out;
  LaurentPoly rest = f;
  while (!rest.is_zero()) {
    auto top = rest.begin();
    for (auto it = rest.begin(); it != rest.end(); ++it)
      if (rtl_lex_less(top->first, it->first)) top = it;
    auto hit = by_leader.find(top->first);
    if (hit == by_leader.end())
      throw InternalError("remainder term x^{" + top->first.compact() + "} is not a leading monomial of " +
                          to_string(target));
    LaurentPoly b = family_poly(target, hit->second);
    QRat c = top->second / b.coeff(top->first);
    out[hit->second] += c;
    rest -= b * c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

QMatrix transition_matrix(FamilyId from, FamilyId to, int n, int degree) {
  const auto cols = family_index(from, n, degree);
  const auto rows = family_index(to, n, degree);
  QMatrix m;
  for (const auto& r : rows) m.row_labels.push_back(r.to_vector());
  for (const auto& c : cols) m.col_labels.push_back(c.to_vector());
  m.entries.assign(rows.size(), std::vector<QRat>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) {
    auto e = expand_in_family(family_poly(from, cols[c]), to, n, degree);
    for (size_t r = 0; r < rows.size(); ++r) {
      auto it = e.find(rows[r]);
      if (it != e.end()) m.entries[r][c] = it->second;
    }
  }
  return m;
}

}  // namespace qkey
