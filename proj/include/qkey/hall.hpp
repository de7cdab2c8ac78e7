#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qkey/exponent.hpp"
#include "qkey/laurent.hpp"
#include "qkey/qrat.hpp"

namespace qkey {

/// Weakly decreasing sequence of positive parts (zeros suppressed).
class Partition {
 public:
  Partition() = default;
  /// Accepts trailing zeros; throws InvalidArgument if `parts` is not a
  /// partition.
  explicit Partition(std::span<const int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  /// Padded with zeros to n entries.
  Exponent padded(int n) const;
  /// Multiplicity of each part value, including m_0 = n - length().
  std::map<int, int> multiplicities(int n) const;
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Expansion in the Q_lambda basis, keyed in descending lexicographic order.
using HLExpansion = std::map<Partition, QRat, std::greater<>>;

std::string to_string(const HLExpansion& e);

/// P_lambda(x_1..x_n; q) = x^lambda prod_{i<j}(x_i - q x_j) d_omega / d_lambda(q).
LaurentPoly hl_P(const Partition& lambda, int n);
/// b_lambda(q) = prod_{i>=1} prod_{j=1}^{m_i} (1 - q^j).
QRat hl_b(const Partition& lambda);
/// Q_lambda = b_lambda(q) P_lambda.
LaurentPoly hl_Q(const Partition& lambda, int n);

/// Rewrites Q_u, u in Z^n, in the partition basis with Littlewood's rules:
///   Q_(..,a,b,..) = -Q_(..,b-1,a+1,..) + q Q_(..,b,a,..) + q Q_(..,a+1,b-1,..)  (a < b)
///   Q_u = 0 when u_n < 0.
/// Always rewrites at the rightmost ascent. An empty result means Q_u = 0.
///
/// Termination: a rewrite at (a, b) keeps the two entries inside [a, b],
/// leaves every position right of the pair untouched and strictly lowers the
/// entry at the right of the pair. The weight is fixed and entries stay within
/// the initial bounds, so the reachable set is finite and each rewrite
/// descends in right-to-left lexicographic order. Fuel (default 10^6 rewrites
/// per query, QKEY_FUEL overrides) guards against a bug breaking this.
HLExpansion straighten_Q(const Exponent& u);

/// One Littlewood rewrite at the ascent (i, i+1), 0-based i, followed by
/// straightening of each resulting term.
HLExpansion straighten_Q_at(const Exponent& u, int i);

/// Q_u(0): coefficient of the empty partition in straighten_Q(u) when |u| = 0
/// and u >= 0, zero otherwise. Always a polynomial in q.
QRat q_at_zero(const Exponent& u);

/// The predicted leading partition of Q_u, or nullopt for minus infinity
/// (when some suffix sum of u is negative). Tail-first recursion.
std::optional<Partition> p_of(const Exponent& u);
/// Same value by enumerating all partitions v <= u of weight |u|, length <= n.
std::optional<Partition> p_of_lattice(const Exponent& u);
/// Largest partition v <= u with |v| = |u| and length <= n, built greedily
/// from the right. Requires nonnegative suffix sums.
Partition max_partition_below(const Exponent& u);

struct TopTerm {
  Partition partition;
  QRat coeff;  // c q^d, the highest-degree term of the full coefficient
};

/// Leading partitions for compare_order, with coefficients truncated to their
/// highest q-degree term. Throws on an empty expansion.
std::vector<TopTerm> top_terms(const HLExpansion& e);
/// The unique top term; throws InternalError when it is not unique.
TopTerm top_term(const HLExpansion& e);

/// Checks both halves of the vanishing / top-term statement for u. Returns
/// an empty string on success, else a description of the failure.
std::string check_topterm_prediction(const Exponent& u);

struct TopTermSweep {
  int checked = 0;
  int vanishing = 0;  // how many of the checked vectors had Q_u = 0
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
/// check_topterm_prediction over every u in [lo, hi]^n.
TopTermSweep sweep_topterm_box(int n, int lo, int hi);
/// check_topterm_prediction over `trials` uniform random u in [lo, hi]^n.
TopTermSweep sweep_topterm_random(int n, int lo, int hi, int trials, std::uint64_t seed);

/// Partitions of weight d with at most `max_len` parts, descending lex.
std::vector<Partition> partitions_of(int d, int max_len);

}  // namespace qkey
