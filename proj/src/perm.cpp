#include "qkey/perm.hpp"

#include <algorithm>
#include <numeric>

#include "qkey/error.hpp"

namespace qkey {

Permutation::Permutation(std::span<const int> images) {
  if (images.size() > static_cast<size_t>(kMaxVars))
    throw InvalidArgument("permutation too large");
  n_ = static_cast<int>(images.size());
  std::array<bool, kMaxVars + 1> seen{};
  for (int j = 0; j < n_; ++j) {
    int x = images[j];
    if (x < 1 || x > n_ || seen[x]) throw InvalidArgument("not a permutation in one-line notation");
    seen[x] = true;
    img_[j] = static_cast<std::uint8_t>(x);
  }
}

Permutation::Permutation(std::initializer_list<int> images)
    : Permutation(std::span<const int>(images.begin(), images.size())) {}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(v);
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(n);
  std::iota(v.rbegin(), v.rend(), 1);
  return Permutation(v);
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) throw InvalidArgument("simple transposition index out of range");
  return identity(n).times_simple(i);
}

Permutation Permutation::inverse() const {
  Permutation r = *this;
  for (int j = 0; j < n_; ++j) r.img_[img_[j] - 1] = static_cast<std::uint8_t>(j + 1);
  return r;
}

Permutation Permutation::times_simple(int i) const {
  if (i < 1 || i >= n_) throw InvalidArgument("simple transposition index out of range");
  Permutation r = *this;
  std::swap(r.img_[i - 1], r.img_[i]);
  return r;
}

int Permutation::length() const {
  int inv = 0;
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (img_[a] > img_[b]) ++inv;
  return inv;
}

std::vector<int> Permutation::reduced_word() const {
  // sigma = sigma' s_i with i a descent of sigma; peel descents off the right.
  std::vector<int> word;
  Permutation p = *this;
  for (;;) {
    int i = 1;
    while (i < n_ && p.ascends_at(i)) ++i;
    if (i >= n_) break;
    word.push_back(i);
    p = p.times_simple(i);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<int> Permutation::reduced_word_alt() const {
  std::vector<int> word;
  Permutation p = *this;
  for (;;) {
    int i = n_ - 1;
    while (i >= 1 && p.ascends_at(i)) --i;
    if (i < 1) break;
    word.push_back(i);
    p = p.times_simple(i);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (int j = 0; j < a.n_; ++j)
    if (a.img_[j] != b.img_[j]) return a.img_[j] <=> b.img_[j];
  return std::strong_ordering::equal;
}

std::string Permutation::to_string() const {
  std::string s;
  for (int j = 0; j < n_; ++j) {
    if (n_ > 9 && j > 0) s += ',';
    s += std::to_string(img_[j]);
  }
  return s;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw InvalidArgument("permutation size mismatch");
  std::vector<int> v(sigma.size());
  for (int j = 1; j <= sigma.size(); ++j) v[j - 1] = sigma(tau(j));
  return Permutation(v);
}

Exponent act_weight(const Exponent& v, const Permutation& sigma) {
  if (v.size() != sigma.size()) throw InvalidArgument("weight and permutation sizes differ");
  Exponent r(v.size());
  for (int j = 1; j <= v.size(); ++j) r[j - 1] = v[sigma(j) - 1];
  return r;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

namespace {

// Assigns to each position j a position of lambda holding the value v_j.
// Among equal values, increasing assignment gives the shortest coset element
// and decreasing assignment the longest.
Permutation coset_extreme(const Exponent& v, bool longest) {
  Exponent lambda = v.sorted_desc();
  const int n = v.size();
  std::vector<int> img(n);
  std::vector<bool> used(n, false);
  for (int j = 0; j < n; ++j) {
    int pick = -1;
    for (int p = 0; p < n; ++p) {
      if (used[p] || lambda[p] != v[j]) continue;
      if (!longest) {
        pick = p;
        break;
      }
      pick = p;
    }
    used[pick] = true;
    img[j] = pick + 1;
  }
  return Permutation(img);
}

}  // namespace

Permutation zeta(const Exponent& v) { return coset_extreme(v, true); }
Permutation eta(const Exponent& v) { return coset_extreme(v, false); }

std::vector<Permutation> coset_scan(const Exponent& v) {
  Exponent lambda = v.sorted_desc();
  std::vector<Permutation> out;
  for (const auto& s : all_permutations(v.size()))
    if (act_weight(lambda, s) == v) out.push_back(s);
  return out;
}

std::vector<Exponent> orbit(const Exponent& lambda) {
  Exponent e = lambda.sorted_desc();
  std::vector<int> v = e.to_vector();
  std::vector<Exponent> out;
  do {
    out.emplace_back(std::span<const int>(v));
  } while (std::prev_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Exponent> weights_of_degree(int n, int d) {
  std::vector<Exponent> out;
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> v(n, 0);
  // descending lexicographic enumeration of compositions of d into n parts
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == n - 1) {
      v[pos] = rest;
      out.emplace_back(std::span<const int>(v));
      return;
    }
    for (int a = rest; a >= 0; --a) {
      v[pos] = a;
      self(self, pos + 1, rest - a);
    }
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace qkey
