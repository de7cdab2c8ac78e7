#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qkey {

/// Largest number of variables supported by the fixed-capacity vectors.
inline constexpr int kMaxVars = 8;

/// Integer vector of length n <= kMaxVars: a monomial exponent in Z^n, or a
/// weight in N^n. Stored inline so polynomial maps do not allocate per key.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(int n);  // zero vector
  Exponent(std::initializer_list<int> v);
  explicit Exponent(std::span<const int> v);

  int size() const { return n_; }
  int operator[](int i) const { return v_[i]; }
  int& operator[](int i) { return v_[i]; }
  const int* begin() const { return v_.data(); }
  const int* end() const { return v_.data() + n_; }
  int* begin() { return v_.data(); }
  int* end() { return v_.data() + n_; }
  std::span<const int> span() const { return {v_.data(), static_cast<size_t>(n_)}; }
  std::vector<int> to_vector() const { return {begin(), end()}; }

  int weight() const;
  bool is_nonnegative() const;
  bool is_dominant() const;  // weakly decreasing
  Exponent reversed() const;
  /// Decreasing reordering.
  Exponent sorted_desc() const;

  Exponent& operator+=(const Exponent& o);
  Exponent& operator-=(const Exponent& o);
  friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }
  friend Exponent operator-(Exponent a, const Exponent& b) { return a -= b; }
  Exponent operator-() const;

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.n_ == b.n_ && std::equal(a.begin(), a.end(), b.begin());
  }
  /// Lexicographic, left to right; shorter vectors first.
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

  /// "210" when every entry is a single digit, otherwise "-2,3,2".
  std::string compact() const;

 private:
  std::array<int, kMaxVars> v_{};
  int n_ = 0;
};

struct ExponentHash {
  size_t operator()(const Exponent& e) const noexcept;
};

/// Position of a vector in the partial order u <= v iff every suffix sum of
/// v - u is nonnegative.
enum class Order { Less, Greater, Equal, Incomparable };

Order compare_order(const Exponent& u, const Exponent& v);

/// Total order refining compare_order: compare at the largest differing index.
/// Returns true when u precedes v (u is smaller).
bool rtl_lex_less(const Exponent& u, const Exponent& v);

/// n(v) = 0 v_1 + 1 v_2 + ... + (n-1) v_n.
long n_stat(const Exponent& v);

/// True when every suffix sum v_k + ... + v_n is nonnegative, i.e. v >= 0.
bool has_nonnegative_suffix_sums(const Exponent& v);

}  // namespace qkey
