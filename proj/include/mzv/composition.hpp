#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace mzv {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Raised when an operation is called outside its domain (parity,
/// admissibility, index range, evaluation point).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Index (k_1, ..., k_d) of a zeta-like symbol, stored left to right.
/// k_d is the rightmost part and decides admissibility.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts) : parts_(parts) { validate(); }
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

  std::size_t depth() const { return parts_.size(); }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }
  bool is_admissible() const { return parts_.empty() || parts_.back() >= 2; }

  int operator[](std::size_t i) const { return parts_[i]; }
  int front() const { return parts_.front(); }
  int back() const { return parts_.back(); }
  std::span<const int> parts() const { return parts_; }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  /// Parts [first, last) in the stored order.
  Composition slice(std::size_t first, std::size_t last) const {
    return Composition(std::vector<int>(parts_.begin() + first, parts_.begin() + last));
  }
  Composition reversed() const {
    return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
  }
  /// a . c
  Composition prepended(int a) const {
    std::vector<int> p;
    p.reserve(parts_.size() + 1);
    p.push_back(a);
    p.insert(p.end(), parts_.begin(), parts_.end());
    return Composition(std::move(p));
  }
  Composition appended(int a) const {
    auto p = parts_;
    p.push_back(a);
    return Composition(std::move(p));
  }
  Composition without_front() const { return slice(1, parts_.size()); }
  Composition without_back() const { return slice(0, parts_.size() - 1); }

  std::size_t trailing_ones() const {
    std::size_t n = 0;
    for (auto it = parts_.rbegin(); it != parts_.rend() && *it == 1; ++it) ++n;
    return n;
  }
  bool all_ones() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int k) { return k == 1; });
  }

  /// "k1,k2,...,kd"; empty string for the empty composition.
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  /// Parses "k1,k2,...,kd" (whitespace tolerated). Empty input gives the empty composition.
  static Composition parse(std::string_view text) {
    std::vector<int> parts;
    std::string token;
    auto flush = [&] {
      if (token.empty()) throw precondition_error("composition: empty part in '" + std::string(text) + "'");
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw precondition_error("composition: not an integer: '" + token + "'");
      }
      if (used != token.size()) throw precondition_error("composition: not an integer: '" + token + "'");
      if (v < 1) throw precondition_error("composition: parts must be positive, got " + token);
      parts.push_back(v);
      token.clear();
    };
    bool any = false;
    for (char ch : text) {
      if (ch == ' ' || ch == '\t') continue;
      any = true;
      if (ch == ',') {
        flush();
      } else {
        token += ch;
      }
    }
    if (any) flush();
    return Composition(std::move(parts));
  }

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  void validate() const {
    for (int k : parts_)
      if (k < 1) throw precondition_error("composition parts must be >= 1");
  }

  std::vector<int> parts_;
};

/// Concatenation u v.
inline Composition concat(const Composition& u, const Composition& v) {
  std::vector<int> p(u.begin(), u.end());
  p.insert(p.end(), v.begin(), v.end());
  return Composition(std::move(p));
}

/// Orders by weight first, then lexicographically.
inline bool weight_lex_less(const Composition& a, const Composition& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  return a < b;
}

/// All compositions of exactly `weight`, in lexicographic order.
inline std::vector<Composition> compositions_of_weight(int weight) {
  std::vector<Composition> out;
  if (weight < 0) return out;
  if (weight == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = 1; k <= remaining; ++k) {
      cur.push_back(k);
      self(self, remaining - k);
      cur.pop_back();
    }
  };
  rec(rec, weight);
  return out;
}

/// Nonempty compositions with 1 <= weight <= max_weight, ordered by (weight, lex).
inline std::vector<Composition> compositions_up_to(int max_weight) {
  std::vector<Composition> out;
  for (int w = 1; w <= max_weight; ++w) {
    auto batch = compositions_of_weight(w);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace mzv
