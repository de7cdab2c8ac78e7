#include "qkey/json_io.hpp"


#include "qkey/error.hpp"

namespace qkey {

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw InvalidArgument("malformed integer: " + j.dump());
    return z;
  }
  throw InvalidArgument("expected an integer, got " + j.dump());
}

namespace {

Json poly_json(const ZPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

ZPoly poly_from(const Json& j) {
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return ZPoly(std::move(c));
}

std::vector<int> ints(const Json& j) { return j.get<std::vector<int>>(); }

}  // namespace

Json to_json(const QRat& r) { return {{"num", poly_json(r.num())}, {"den", poly_json(r.den())}}; }

QRat qrat_from_json(const Json& j) { return QRat(poly_from(j.at("num")), poly_from(j.at("den"))); }

Json to_json(const LaurentPoly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f) terms.push_back({{"exp", e.to_vector()}, {"coeff", to_json(c)}});
  return {{"n", f.nvars()}, {"terms", terms}};
}

LaurentPoly laurent_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  LaurentPoly f(n);
  for (const auto& t : j.at("terms")) {
    auto v = ints(t.at("exp"));
    if (static_cast<int>(v.size()) != n) throw InvalidArgument("exponent length differs from n");
    f.add_term(Exponent(std::span<const int>(v)), qrat_from_json(t.at("coeff")));
  }
  return f;
}

Json to_json(const HeckeElt& h) {
  Json terms = Json::array();
  for (const auto& [s, c] : h.terms()) terms.push_back({{"perm", s.images()}, {"coeff", to_json(c)}});
  return {{"n", h.n()}, {"terms", terms}};
}

HeckeElt hecke_from_json(const Json& j) {
  HeckeElt h(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) {
    auto v = ints(t.at("perm"));
    h.add_term(Permutation(std::span<const int>(v)), qrat_from_json(t.at("coeff")));
  }
  return h;
}

Json to_json(const HLExpansion& e) {
  Json terms = Json::array();
  for (const auto& [p, c] : e) terms.push_back({{"partition", p.parts()}, {"coeff", to_json(c)}});
  return {{"terms", terms}};
}

HLExpansion hl_expansion_from_json(const Json& j) {
  HLExpansion e;
  for (const auto& t : j.at("terms")) {
    auto v = ints(t.at("partition"));
    e[Partition(std::span<const int>(v))] += qrat_from_json(t.at("coeff"));
  }
  return e;
}

Json to_json(const OpWord& w) {
  Json a = Json::array();
  for (const auto& f : w) a.push_back({{"kind", to_string(f.kind)}, {"i", f.index}, {"shift", to_json(f.shift)}});
  return a;
}

OpWord op_word_from_json(const Json& j) {
  OpWord w;
  for (const auto& f : j) {
    OpFactor op;
    op.kind = op_kind_from_string(f.at("kind").get<std::string>());
    op.index = f.at("i").get<int>();
    if (f.contains("shift")) op.shift = qrat_from_json(f.at("shift"));
    w.push_back(op);
  }
  return w;
}

Json to_json(const QMatrix& m) {
  Json entries = Json::array();
  for (const auto& row : m.entries) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    entries.push_back(r);
  }
  return {{"rows", m.row_labels}, {"cols", m.col_labels}, {"entries", entries}};
}

QMatrix matrix_from_json(const Json& j) {
  QMatrix m;
  m.row_labels = j.at("rows").get<std::vector<std::vector<int>>>();
  m.col_labels = j.at("cols").get<std::vector<std::vector<int>>>();
  for (const auto& row : j.at("entries")) {
    std::vector<QRat> r;
    for (const auto& x : row) r.push_back(qrat_from_json(x));
    m.entries.push_back(std::move(r));
  }
  return m;
}

Json to_json(const ScalarReport& r) {
  Json gram = to_json(r.gram);
  return {{"lambda", r.lambda},     {"n", r.n},
          {"left", r.gram.row_labels}, {"right", r.gram.col_labels},
          {"gram", gram.at("entries")}, {"pass", r.pass}};
}

ScalarReport scalar_report_from_json(const Json& j) {
  ScalarReport r;
  r.lambda = j.at("lambda").get<std::vector<int>>();
  r.n = j.at("n").get<int>();
  r.gram = matrix_from_json({{"rows", j.at("left")}, {"cols", j.at("right")}, {"entries", j.at("gram")}});
  r.pass = j.at("pass").get<bool>();
  return r;
}

}  // namespace qkey
