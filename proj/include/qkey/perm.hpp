#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qkey/exponent.hpp"

namespace qkey {

/// Element of S_n in one-line notation: images()[j-1] = sigma(j).
class Permutation {
 public:
  Permutation() = default;
  /// Validates that `images` is a bijection of {1..n}.
  explicit Permutation(std::span<const int> images);
  Permutation(std::initializer_list<int> images);

  static Permutation identity(int n);
  /// The longest element omega = (n, n-1, ..., 1).
  static Permutation longest(int n);
  /// Simple transposition s_i, 1 <= i <= n-1.
  static Permutation simple(int n, int i);

  int size() const { return n_; }
  /// sigma(j), 1-based.
  int operator()(int j) const { return img_[j - 1]; }
  std::vector<int> images() const { return {img_.begin(), img_.begin() + n_}; }

  Permutation inverse() const;
  /// sigma * s_i: exchanges the entries at positions i and i+1.
  Permutation times_simple(int i) const;
  /// True when l(sigma s_i) > l(sigma), i.e. sigma(i) < sigma(i+1).
  bool ascends_at(int i) const { return img_[i - 1] < img_[i]; }

  int length() const;
  /// Word (w_1..w_l) with sigma = s_{w_1} s_{w_2} ... s_{w_l}, l = length().
  std::vector<int> reduced_word() const;
  /// Same, choosing the rightmost descent at each step of the bubble sort.
  std::vector<int> reduced_word_alt() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.n_ == b.n_ && std::equal(a.img_.begin(), a.img_.begin() + a.n_, b.img_.begin());
  }
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

  /// "312"
  std::string to_string() const;

 private:
  std::array<std::uint8_t, kMaxVars> img_{};
  int n_ = 0;
};

/// (sigma tau)(j) = sigma(tau(j)).
Permutation compose(const Permutation& sigma, const Permutation& tau);

/// Right action on index positions: (v sigma)_j = v_{sigma(j)}.
Exponent act_weight(const Exponent& v, const Permutation& sigma);

/// All of S_n in lexicographic one-line order (123, 132, 213, ...).
std::vector<Permutation> all_permutations(int n);

/// Longest permutation sigma with act_weight(lambda, sigma) = v, where lambda
/// is the decreasing reordering of v.
Permutation zeta(const Exponent& v);
/// Shortest such permutation.
Permutation eta(const Exponent& v);
/// Brute-force scan of the coset {sigma : lambda sigma = v}; used as an oracle.
std::vector<Permutation> coset_scan(const Exponent& v);

/// Distinct rearrangements of lambda in descending lexicographic order.
std::vector<Exponent> orbit(const Exponent& lambda);

/// All weights in N^n of total degree d, in descending lexicographic order.
std::vector<Exponent> weights_of_degree(int n, int d);

}  // namespace qkey
