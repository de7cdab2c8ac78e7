#include "qkey/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <sstream>

#include "qkey/error.hpp"
#include "qkey/hecke.hpp"
#include "qkey/json_io.hpp"
#include "qkey/operators.hpp"
#include "qkey/qkey.hpp"
#include "qkey/scalar.hpp"

namespace qkey::cli {

std::vector<int> parse_vector(const std::string& s, bool allow_negative) {
  std::string body = s;
  if (body.size() >= 2 && body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
  std::vector<int> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("malformed vector '" + s + "'");
    }
    if (used != item.size()) throw InvalidArgument("malformed vector '" + s + "'");
    if (v < 0 && !allow_negative) throw InvalidArgument("negative entry in '" + s + "' where a weight in N^n is required");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidArgument("empty vector");
  if (static_cast<int>(out.size()) > kMaxVars)
    throw InvalidArgument("at most " + std::to_string(kMaxVars) + " variables are supported");
  return out;
}

namespace {

Exponent to_exponent(const std::vector<int>& v) { return Exponent(std::span<const int>(v)); }

void check_n(int n) {
  if (n < 1 || n > kMaxVars) throw InvalidArgument("n must lie in 1.." + std::to_string(kMaxVars));
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw InvalidArgument("malformed rational '" + s + "'");
  r.canonicalize();
  return r;
}

struct Common {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

void add_format(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void print_poly(std::ostream& out, const LaurentPoly& f, const std::optional<Rational>& q0, bool json) {
  if (q0) {
    LaurentPoly g = specialize_q(f, *q0);
    if (json) out << to_json(g).dump() << "\n";
    else out << (g.is_zero() ? "0" : g.to_string()) << "\n";
    return;
  }
  if (json) out << to_json(f).dump() << "\n";
  else out << (f.is_zero() ? "0" : f.to_string()) << "\n";
}

// "U:2,1,0", "Uhat:0,1,2", "K:...", "Khat:...", "M:1,-1,0"
LaurentPoly parse_operand(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw InvalidArgument("operand '" + s + "' must look like FAMILY:v1,v2,...");
  FamilyId fam = family_from_string(s.substr(0, colon));
  auto v = parse_vector(s.substr(colon + 1), fam == FamilyId::Monomial);
  return family_poly(fam, to_exponent(v));
}

std::string pass_word(bool ok) { return ok ? "PASS" : "FAIL"; }

int report_line(std::ostream& out, bool ok, const std::string& what) {
  out << pass_word(ok) << " " << what << "\n";
  return ok ? kExitPass : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact non-symmetric Hall-Littlewood computations"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // compute
  Common c_compute;
  std::string family, index, q0_text, word_text;
  auto* compute = app.add_subcommand("compute", "Print U_v, Uhat_v, K_v, Khat_v or x^v");
  compute->add_option("--family", family, "U, Uhat, K, Khat or M")->required();
  compute->add_option("--index", index, "Weight, e.g. 1,0,2")->required();
  compute->add_option("--q0", q0_text, "Specialize q to this rational");
  compute->add_option("--word", word_text, "Reduced word of zeta(v) to build U_v along (family U only)");
  add_format(compute, c_compute);

  // hl
  Common c_hl;
  std::string hl_family = "P", lambda_text;
  int hl_n = 0;
  auto* hl = app.add_subcommand("hl", "Print a Hall-Littlewood polynomial");
  hl->add_option("--family", hl_family, "P or Q")->check(CLI::IsMember({"P", "Q"}));
  hl->add_option("--lambda", lambda_text, "Partition, e.g. 2,1")->required();
  hl->add_option("--n", hl_n, "Number of variables (default: length of --lambda)");
  hl->add_option("--q0", q0_text, "Specialize q to this rational");
  add_format(hl, c_hl);

  // straighten
  Common c_str;
  std::string u_text;
  auto* straighten = app.add_subcommand("straighten", "Expand Q_u, u in Z^n, in the Q_lambda basis");
  straighten->add_option("--u", u_text, "Integer vector, e.g. -2,3,2")->required();
  add_format(straighten, c_str);

  // scalar
  Common c_sc;
  std::string left_text, right_text;
  int qcap = -1;
  auto* scalar = app.add_subcommand("scalar", "Scalar product (f, g)_q");
  scalar->add_option("--left", left_text, "FAMILY:vector, e.g. U:2,1,0 or M:1,0,3")->required();
  scalar->add_option("--right", right_text, "FAMILY:vector")->required();
  scalar->add_option("--qcap", qcap, "Also evaluate the truncated constant-term oracle at this q-degree");
  scalar->add_flag("--q0-zero", "Report the q = 0 specialization instead");
  add_format(scalar, c_sc);

  // matrix
  Common c_mx;
  std::string from_text, to_text;
  int mx_n = 0, mx_degree = 0;
  auto* matrix = app.add_subcommand("matrix", "Transition matrix between families in one degree");
  matrix->add_option("--from", from_text, "Source family (U, Uhat, K, Khat, M, P)")->required();
  matrix->add_option("--to", to_text, "Target family")->required();
  matrix->add_option("--n", mx_n, "Number of variables")->required();
  matrix->add_option("--degree", mx_degree, "Total degree")->required()->check(CLI::NonNegativeNumber);
  add_format(matrix, c_mx);

  // verify
  Common c_v;
  std::string check;
  int v_n = 3, v_degree = 3, trials = 100;
  std::uint64_t seed = 42;
  std::string v_lambda;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify
      ->add_option("--check", check, "duality, monomial-duality, flag, operators, adjoint, cauchy or lemma-topterm")
      ->required()
      ->check(CLI::IsMember(
          {"duality", "monomial-duality", "flag", "operators", "adjoint", "cauchy", "lemma-topterm"}));
  verify->add_option("--n", v_n, "Number of variables");
  verify->add_option("--lambda", v_lambda, "Partition for duality checks");
  verify->add_option("--degree", v_degree, "Degree, degree cap or exponent range");
  verify->add_option("--trials", trials, "Random trials")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "Random seed");
  add_format(verify, c_v);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    std::optional<Rational> q0;
    if (!q0_text.empty()) q0 = parse_rational(q0_text);

    if (*compute) {
      FamilyId fam = family_from_string(family);
      if (fam == FamilyId::HL_P) throw InvalidArgument("use the hl subcommand for Hall-Littlewood polynomials");
      auto v = to_exponent(parse_vector(index, fam == FamilyId::Monomial));
      LaurentPoly f;
      if (!word_text.empty()) {
        if (fam != FamilyId::U) throw InvalidArgument("--word applies to family U only");
        std::vector<int> word;
        if (word_text != "-") word = parse_vector(word_text, false);
        f = u_poly_along(v, word);
      } else {
        f = family_poly(fam, v);
      }
      print_poly(out, f, q0, c_compute.json());
      return kExitPass;
    }

    if (*hl) {
      auto parts = parse_vector(lambda_text, false);
      const int n = hl_n > 0 ? hl_n : static_cast<int>(parts.size());
      check_n(n);
      Partition lam{std::span<const int>(parts)};
      if (lam.length() > n) throw InvalidArgument("partition has more than n parts");
      print_poly(out, hl_family == "P" ? hl_P(lam, n) : hl_Q(lam, n), q0, c_hl.json());
      return kExitPass;
    }

    if (*straighten) {
      auto u = to_exponent(parse_vector(u_text, true));
      HLExpansion e = straighten_Q(u);
      if (c_str.json()) {
        Json j = to_json(e);
        if (!e.empty()) {
          TopTerm t = top_term(e);
          j["top"] = {{"partition", t.partition.parts()}, {"coeff", to_json(t.coeff)}};
        } else {
          j["top"] = nullptr;
        }
        out << j.dump() << "\n";
      } else if (e.empty()) {
        out << "0\n";
      } else {
        TopTerm t = top_term(e);
        out << to_string(e) << "\n";
        HLExpansion top{{t.partition, t.coeff}};
        out << "top: " << to_string(top) << "\n";
      }
      return kExitPass;
    }

    if (*scalar) {
      LaurentPoly f = parse_operand(left_text), g = parse_operand(right_text);
      if (f.nvars() != g.nvars()) throw InvalidArgument("operands have different numbers of variables");
      QRat value = scalar->count("--q0-zero") ? scalar_0(f, g) : scalar_q(f, g);
      std::optional<QRat> oracle;
      if (qcap >= 0) oracle = ct_oracle(f, g, qcap);
      if (c_sc.json()) {
        Json j = {{"value", to_json(value)}};
        if (oracle) {
          j["oracle"] = to_json(*oracle);
          j["qcap"] = qcap;
          j["agree"] = agree_mod_q(value, *oracle, qcap);
        }
        out << j.dump() << "\n";
      } else {
        out << value.to_string() << "\n";
        if (oracle)
          out << "oracle (mod q^" << qcap + 1 << "): " << oracle->to_string() << " "
              << (agree_mod_q(value, *oracle, qcap) ? "agrees" : "DISAGREES") << "\n";
      }
      return kExitPass;
    }

    if (*matrix) {
      check_n(mx_n);
      QMatrix m = transition_matrix(family_from_string(from_text), family_from_string(to_text), mx_n, mx_degree);
      if (c_mx.json()) out << to_json(m).dump() << "\n";
      else out << m.to_string();
      return kExitPass;
    }

    if (*verify) {
      check_n(v_n);
      const bool json = c_v.json();
      if (check == "duality" || check == "monomial-duality") {
        ScalarReport r;
        std::string what;
        if (!v_lambda.empty()) {
          Partition lam{std::span<const int>(parse_vector(v_lambda, false))};
          if (lam.length() > v_n) throw InvalidArgument("partition has more than n parts");
          r = check == "duality" ? verify_duality(lam, v_n) : verify_monomial_duality(lam, v_n);
          what = check + " lambda=" + lam.padded(v_n).compact() + " n=" + std::to_string(v_n);
        } else {
          if (check != "duality") throw InvalidArgument("monomial-duality needs --lambda");
          r = verify_duality_weight(v_n, v_degree);
          what = "duality weight=" + std::to_string(v_degree) + " n=" + std::to_string(v_n);
        }
        what += " (" + std::to_string(r.gram.entries.size()) + "x" +
                std::to_string(r.gram.col_labels.size()) + " Gram)";
        if (json) {
          out << to_json(r).dump() << "\n";
          return r.pass ? kExitPass : kExitFail;
        }
        return report_line(out, r.pass, what);
      }
      if (check == "flag") {
        QMatrix m = yb_duality_matrix(v_n);
        bool ok = m.is_identity();
        if (json) {
          out << Json{{"n", v_n}, {"matrix", to_json(m)}, {"pass", ok}}.dump() << "\n";
          return ok ? kExitPass : kExitFail;
        }
        return report_line(out, ok, "flag <Y_sigma, Yhat_{omega nu}> = delta n=" + std::to_string(v_n));
      }
      if (check == "operators") {
        if (v_n < 2) throw InvalidArgument("operator identities need n >= 2");
        IdentityReport rep = verify_operator_identities(v_n, trials, v_degree, seed);
        int code = kExitPass;
        Json arr = Json::array();
        for (const auto& c : rep.checks) {
          if (!c.ok()) code = kExitFail;
          if (json) arr.push_back({{"name", c.name}, {"passed", c.passed}, {"total", c.total}});
          else report_line(out, c.ok(), c.name + " " + std::to_string(c.passed) + "/" + std::to_string(c.total));
        }
        if (json) out << Json{{"n", v_n}, {"seed", seed}, {"checks", arr}, {"pass", code == kExitPass}}.dump() << "\n";
        return code;
      }
      if (check == "adjoint") {
        AdjointReport rep = verify_adjoint_ops(v_n, trials, v_degree, seed);
        if (json) {
          out << Json{{"n", v_n}, {"seed", seed}, {"trials", rep.trials}, {"box_passed", rep.box_passed},
                      {"nabla_passed", rep.nabla_passed}, {"pass", rep.ok()}}
                     .dump()
              << "\n";
          return rep.ok() ? kExitPass : kExitFail;
        }
        int a = report_line(out, rep.box_passed == rep.trials,
                            "adjoint box_i/box_{n-i} " + std::to_string(rep.box_passed) + "/" +
                                std::to_string(rep.trials));
        int b = report_line(out, rep.nabla_passed == rep.trials,
                            "adjoint nabla_i/nabla_{n-i} " + std::to_string(rep.nabla_passed) + "/" +
                                std::to_string(rep.trials));
        return std::max(a, b);
      }
      if (check == "cauchy") {
        bool ok = verify_cauchy(v_n, v_degree);
        if (json) {
          out << Json{{"n", v_n}, {"degree_cap", v_degree}, {"pass", ok}}.dump() << "\n";
          return ok ? kExitPass : kExitFail;
        }
        return report_line(out, ok, "cauchy n=" + std::to_string(v_n) + " cap=" + std::to_string(v_degree));
      }
      if (check == "lemma-topterm") {
        TopTermSweep box = sweep_topterm_box(v_n, -2, 3);
        TopTermSweep rnd = sweep_topterm_random(v_n, -3, 4, trials, seed);
        bool ok = box.ok() && rnd.ok();
        if (json) {
          out << Json{{"n", v_n},
                      {"seed", seed},
                      {"box_checked", box.checked},
                      {"random_checked", rnd.checked},
                      {"failures", box.failures.size() + rnd.failures.size()},
                      {"pass", ok}}
                     .dump()
              << "\n";
        } else {
          report_line(out, box.ok(), "lemma-topterm box [-2,3]^" + std::to_string(v_n) + " " +
                                         std::to_string(box.checked - static_cast<int>(box.failures.size())) +
                                         "/" + std::to_string(box.checked));
          report_line(out, rnd.ok(), "lemma-topterm random [-3,4]^" + std::to_string(v_n) + " " +
                                         std::to_string(rnd.checked - static_cast<int>(rnd.failures.size())) +
                                         "/" + std::to_string(rnd.checked));
          for (const auto& f : box.failures) err << "  " << f << "\n";
          for (const auto& f : rnd.failures) err << "  " << f << "\n";
        }
        return ok ? kExitPass : kExitFail;
      }
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Pole& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace qkey::cli
