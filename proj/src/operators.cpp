#include "qkey/operators.hpp"

#include "qkey/error.hpp"

namespace qkey {

std::string to_string(OpKind kind) {
  switch (kind) {
    case OpKind::Partial: return "partial";
    case OpKind::Pi: return "pi";
    case OpKind::PiHat: return "pihat";
    case OpKind::T: return "T";
    case OpKind::Box: return "box";
    case OpKind::Nabla: return "nabla";
  }
  return "?";
}

OpKind op_kind_from_string(const std::string& s) {
  for (OpKind k : {OpKind::Partial, OpKind::Pi, OpKind::PiHat, OpKind::T, OpKind::Box, OpKind::Nabla})
    if (to_string(k) == s) return k;
  throw InvalidArgument("unknown operator kind: " + s);
}

namespace {

void check_index(const LaurentPoly& f, int i) {
  if (i < 1 || i >= f.nvars()) throw InvalidArgument("operator index out of range");
}

// Adds c * (x^e) d_i to out. With a = e_i, b = e_{i+1}:
//   a > b:  x^e d_i =  sum_{j=0}^{a-b-1} x_i^{a-1-j} x_{i+1}^{b+j}
//   a < b:  x^e d_i = -sum_{j=0}^{b-a-1} x_i^{b-1-j} x_{i+1}^{a+j}
void partial_term(const Exponent& e, const QRat& c, int i, LaurentPoly& out) {
  const int p = i - 1;
  int a = e[p], b = e[p + 1];
  if (a == b) return;
  QRat coeff = c;
  if (a < b) {
    std::swap(a, b);
    coeff = -c;
  }
  Exponent t = e;
  for (int j = 0; j < a - b; ++j) {
    t[p] = a - 1 - j;
    t[p + 1] = b + j;
    out.add_term(t, coeff);
  }
}

}  // namespace

LaurentPoly apply_partial(const LaurentPoly& f, int i) {
  check_index(f, i);
  LaurentPoly out(f.nvars());
  for (const auto& [e, c] : f) partial_term(e, c, i, out);
  return out;
}

LaurentPoly apply_pi(const LaurentPoly& f, int i) {
  check_index(f, i);
  LaurentPoly out(f.nvars());
  for (const auto& [e, c] : f) {
    Exponent t = e;
    ++t[i - 1];
    partial_term(t, c, i, out);
  }
  return out;
}

LaurentPoly apply_pihat(const LaurentPoly& f, int i) {
  check_index(f, i);
  Exponent shift(f.nvars());
  shift[i] = 1;
  return apply_partial(f, i).shifted(shift);
}

LaurentPoly apply_box(const LaurentPoly& f, int i) {
  check_index(f, i);
  LaurentPoly out(f.nvars());
  const QRat mq = -QRat::q();
  for (const auto& [e, c] : f) {
    Exponent t = e;
    ++t[i - 1];
    partial_term(t, c, i, out);
    t = e;
    ++t[i];
    partial_term(t, c * mq, i, out);
  }
  return out;
}

LaurentPoly apply_nabla(const LaurentPoly& f, int i) {
  check_index(f, i);
  LaurentPoly d = apply_partial(f, i);
  LaurentPoly out(f.nvars());
  const QRat mq = -QRat::q();
  for (const auto& [e, c] : d) {
    Exponent t = e;
    ++t[i];
    out.add_term(t, c);
    t = e;
    ++t[i - 1];
    out.add_term(t, c * mq);
  }
  return out;
}

LaurentPoly apply_T(const LaurentPoly& f, int i) { return apply_box(f, i) - f; }

LaurentPoly apply_op(const LaurentPoly& f, OpKind kind, int i) {
  switch (kind) {
    case OpKind::Partial: return apply_partial(f, i);
    case OpKind::Pi: return apply_pi(f, i);
    case OpKind::PiHat: return apply_pihat(f, i);
    case OpKind::T: return apply_T(f, i);
    case OpKind::Box: return apply_box(f, i);
    case OpKind::Nabla: return apply_nabla(f, i);
  }
  throw InvalidArgument("unknown operator kind");
}

LaurentPoly apply_factor(const LaurentPoly& f, const OpFactor& op) {
  LaurentPoly r = apply_op(f, op.kind, op.index);
  if (!op.shift.is_zero()) r += f * op.shift;
  return r;
}

LaurentPoly apply_word(const LaurentPoly& f, const OpWord& word) {
  LaurentPoly r = f;
  for (const auto& op : word) r = apply_factor(r, op);
  return r;
}

LaurentPoly apply_partial_word(const LaurentPoly& f, const std::vector<int>& word) {
  LaurentPoly r = f;
  for (int i : word) r = apply_partial(r, i);
  return r;
}

LaurentPoly apply_partial_omega(const LaurentPoly& f) {
  return apply_partial_word(f, Permutation::longest(f.nvars()).reduced_word());
}

OpFactor yang_baxter_factor(YBVariant variant, int i, int k) {
  if (k < 1) throw InvalidArgument("Yang-Baxter factor requires k >= 1");
  QRat c = QRat::q() * q_int(k - 1) / q_int(k);
  if (variant == YBVariant::Plain) return {OpKind::Box, i, -c};
  return {OpKind::Nabla, i, c};
}

OpFactor r_factor(int i, int a, int b) { return yang_baxter_factor(YBVariant::Plain, i, b - a); }
OpFactor s_factor(int i, int a, int b) { return yang_baxter_factor(YBVariant::Hat, i, b - a); }

OpWord yang_baxter_word(int n, const std::vector<int>& word, YBVariant variant) {
  OpWord out;
  Permutation sigma = Permutation::identity(n);
  for (int i : word) {
    if (!sigma.ascends_at(i)) throw InvalidArgument("word is not reduced");
    out.push_back(yang_baxter_factor(variant, i, sigma(i + 1) - sigma(i)));
    sigma = sigma.times_simple(i);
  }
  return out;
}

OpWord yang_baxter_word(const Permutation& sigma, YBVariant variant) {
  return yang_baxter_word(sigma.size(), sigma.reduced_word(), variant);
}

LaurentPoly apply_hecke(const LaurentPoly& f, const HeckeElt& h) {
  if (h.n() != f.nvars()) throw InvalidArgument("Hecke element and polynomial ranks differ");
  LaurentPoly out(f.nvars());
  for (const auto& [s, c] : h.terms()) {
    LaurentPoly g = f;
    for (int i : s.reduced_word()) g = apply_T(g, i);
    out += g * c;
  }
  return out;
}

LaurentPoly q_vandermonde(int n) {
  LaurentPoly r = LaurentPoly::constant(n, 1);
  const QRat mq = -QRat::q();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      r = r * (LaurentPoly::variable(n, i) + LaurentPoly::variable(n, j) * mq);
  return r;
}

LaurentPoly q_vandermonde_dual(int n) {
  LaurentPoly r = LaurentPoly::constant(n, 1);
  const QRat mq = -QRat::q();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      r = r * (LaurentPoly::variable(n, j) + LaurentPoly::variable(n, i) * mq);
  return r;
}

bool IdentityReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok()) return false;
  return true;
}

LaurentPoly random_laurent(int n, int terms, int range, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> expo(-range, range);
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> qdeg(0, 2);
  LaurentPoly f(n);
  for (int t = 0; t < terms; ++t) {
    Exponent e(n);
    for (int k = 0; k < n; ++k) e[k] = expo(rng);
    int c = small(rng);
    if (c == 0) c = 1;
    f.add_term(e, QRat(ZPoly::monomial(c, qdeg(rng))));
  }
  return f;
}

namespace {

class Checker {
 public:
  void record(const std::string& name, bool ok) {
    for (auto& c : report.checks) {
      if (c.name == name) {
        ++c.total;
        if (ok) ++c.passed;
        return;
      }
    }
    report.checks.push_back({name, ok ? 1 : 0, 1});
  }
  IdentityReport report;
};

LaurentPoly apply_ops(LaurentPoly f, OpKind kind, std::initializer_list<int> idx) {
  for (int i : idx) f = apply_op(f, kind, i);
  return f;
}

}  // namespace

IdentityReport verify_operator_identities(int n, int trials, int range, std::uint64_t seed) {
  if (n < 2) throw InvalidArgument("operator identities need n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_i(1, n - 1);
  std::uniform_int_distribution<int> param(0, 6);
  Checker chk;
  const QRat q = QRat::q();
  const QRat one_plus_q = q + 1;
  for (int t = 0; t < trials; ++t) {
    LaurentPoly f = random_laurent(n, 3, range, rng);
    const int i = pick_i(rng);

    LaurentPoly fT = apply_T(f, i);
    chk.record("Hecke quadratic (T_i+1)(T_i-q)=0",
               (apply_T(fT + f, i) - (fT + f) * q).is_zero());

    LaurentPoly fbox = apply_box(f, i), fnab = apply_nabla(f, i);
    chk.record("box^2 = (1+q) box", apply_box(fbox, i) == fbox * one_plus_q);
    chk.record("nabla^2 = -(1+q) nabla", apply_nabla(fnab, i) == fnab * (-one_plus_q));
    chk.record("box nabla = 0", apply_nabla(fbox, i).is_zero());
    chk.record("nabla box = 0", apply_box(fnab, i).is_zero());
    chk.record("nabla = box - (1+q)", fnab == fbox - f * one_plus_q);

    if (n >= 3) {
      const int j = std::uniform_int_distribution<int>(1, n - 2)(rng);
      chk.record("braid T_i T_i+1 T_i = T_i+1 T_i T_i+1",
                 apply_ops(f, OpKind::T, {j, j + 1, j}) == apply_ops(f, OpKind::T, {j + 1, j, j + 1}));
      int a = param(rng), b, c;
      do {
        b = a + 1 + param(rng);
        c = b + 1 + param(rng);
      } while (b - a == c - b);
      OpWord lhs = {r_factor(j, a, b), r_factor(j + 1, a, c), r_factor(j, b, c)};
      OpWord rhs = {r_factor(j + 1, b, c), r_factor(j, a, c), r_factor(j + 1, a, b)};
      chk.record("Yang-Baxter equation for R", apply_word(f, lhs) == apply_word(f, rhs));
      OpWord lhs_s = {s_factor(j, a, b), s_factor(j + 1, a, c), s_factor(j, b, c)};
      OpWord rhs_s = {s_factor(j + 1, b, c), s_factor(j, a, c), s_factor(j + 1, a, b)};
      chk.record("Yang-Baxter equation for S", apply_word(f, lhs_s) == apply_word(f, rhs_s));
    }
    if (n >= 4) {
      chk.record("far commutation T_1 T_3 = T_3 T_1",
                 apply_ops(f, OpKind::T, {1, 3}) == apply_ops(f, OpKind::T, {3, 1}));
    }

    LaurentPoly f0 = specialize_q(f, 0);
    chk.record("box -> pi at q=0", specialize_q(fbox, 0) == apply_pi(f0, i));
    chk.record("nabla -> pihat at q=0", specialize_q(fnab, 0) == apply_pihat(f0, i));
  }
  return chk.report;
}

}  // namespace qkey
