#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qkey/hall.hpp"
#include "qkey/laurent.hpp"
#include "qkey/matrix.hpp"
#include "qkey/qrat.hpp"

namespace qkey {

/// (f, g)_q = CT(f g^club Theta), computed monomial by monomial as
/// sum c_u d_v Q_{u - v omega}(0). Exact; no series are formed.
QRat scalar_q(const LaurentPoly& f, const LaurentPoly& g);
/// The q = 0 specialization of scalar_q.
QRat scalar_0(const LaurentPoly& f, const LaurentPoly& g);

/// CT(f g^club Theta) with every factor 1/(1 - q x_i/x_j) expanded as a
/// geometric series and all terms of q-degree above qcap dropped. The
/// result is a polynomial in q of degree <= qcap.
QRat ct_oracle(const LaurentPoly& f, const LaurentPoly& g, int qcap);

struct CtStable {
  QRat value;
  int qcap = 0;       // the cap at which two consecutive values agreed
  bool stable = false;
};
/// Raises qcap from `start` until two consecutive truncations agree or
/// `max_cap` is reached.
CtStable ct_oracle_stable(const LaurentPoly& f, const LaurentPoly& g, int start, int max_cap);

/// True when a and b have the same power series at q = 0 up to q^cap.
bool agree_mod_q(const QRat& a, const QRat& b, int cap);

struct ScalarReport {
  std::vector<int> lambda;  // empty for reports not tied to one orbit
  int n = 0;
  QMatrix gram;             // rows: left index set, columns: right index set
  bool pass = false;
};

/// Gram matrix (U_v, Û_{u omega})_q over v, u in the orbit of lambda; passes
/// iff it is the identity.
ScalarReport verify_duality(const Partition& lambda, int n);
/// Same over all v, u in N^n of total degree `degree`.
ScalarReport verify_duality_weight(int n, int degree);
/// Row (U_v, x^lambda)_q over v in the orbit; passes iff it is the indicator
/// of v = lambda omega.
ScalarReport verify_monomial_duality(const Partition& lambda, int n);

/// One adjointness identity checked on random pairs.
struct AdjointReport {
  int box_passed = 0;
  int nabla_passed = 0;
  int trials = 0;
  bool ok() const { return box_passed == trials && nabla_passed == trials; }
};
/// (f box_i, g)_q = (f, g box_{n-i})_q and the nabla analogue on random
/// Laurent f, g with exponents in [-degree, degree] and random i.
AdjointReport verify_adjoint_ops(int n, int trials, int degree, std::uint64_t seed);

/// sum_{|u| <= cap} K_u(x) K^_{u omega}(y) against prod_{i+j<=n+1} 1/(1 - x_i y_j),
/// both truncated at x-degree cap. Requires 2n <= kMaxVars.
bool verify_cauchy(int n, int degree_cap);

/// For dominant u, lambda of weight <= max_weight and rearrangements v of u,
/// mu of lambda: both (x^v, x^lambda)_q and (x^u, x^mu)_q nonzero forces
/// u = lambda, v = lambda omega, mu = u omega. Returns the first
/// counterexample, or an empty string.
std::string check_monomial_vanishing(int n, int max_weight);

}  // namespace qkey
