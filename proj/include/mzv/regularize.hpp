#pragma once

#include <map>
#include <mutex>
#include <string>

#include "mzv/stuffle.hpp"

namespace mzv {

/// Polynomial in the regularization symbol T = zeta*(1) whose coefficients are
/// combinations of admissible compositions.
class TPoly {
 public:
  using Map = std::map<int, WordCombo>;

  TPoly() = default;
  explicit TPoly(WordCombo w, int t_exp = 0) { add(t_exp, w); }

  static TPoly one() { return TPoly(WordCombo::unit()); }
  /// T^1 * ()
  static TPoly t() { return TPoly(WordCombo::unit(), 1); }

  void add(int t_exp, const WordCombo& w, const Rational& scale = 1) {
    if (w.is_zero() || scale == 0) return;
    auto& slot = coeffs_[t_exp];
    slot.add(w, scale);
    if (slot.is_zero()) coeffs_.erase(t_exp);
  }
  void add(const TPoly& o, const Rational& scale = 1) {
    for (const auto& [e, w] : o.coeffs_) add(e, w, scale);
  }

  const Map& coeffs() const { return coeffs_; }
  auto begin() const { return coeffs_.begin(); }
  auto end() const { return coeffs_.end(); }
  bool is_zero() const { return coeffs_.empty(); }

  /// -1 for the zero polynomial.
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

  WordCombo coeff(int t_exp) const {
    auto it = coeffs_.find(t_exp);
    return it == coeffs_.end() ? WordCombo{} : it->second;
  }

  std::size_t max_depth() const {
    std::size_t d = 0;
    for (const auto& [e, w] : coeffs_) d = std::max(d, w.max_depth());
    return d;
  }

  bool all_admissible() const {
    for (const auto& [e, w] : coeffs_)
      for (const auto& [c, q] : w)
        if (!c.is_admissible()) return false;
    return true;
  }

  TPoly& operator+=(const TPoly& o) {
    add(o);
    return *this;
  }
  TPoly& operator-=(const TPoly& o) {
    add(o, -1);
    return *this;
  }
  TPoly& operator*=(const Rational& s) {
    if (s == 0) {
      coeffs_.clear();
    } else {
      for (auto& [e, w] : coeffs_) w *= s;
    }
    return *this;
  }
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(TPoly a, const Rational& s) { return a *= s; }
  friend TPoly operator*(const Rational& s, TPoly a) { return a *= s; }

  /// Ring product; coefficients multiply by the stuffle product.
  friend TPoly operator*(const TPoly& a, const TPoly& b) {
    TPoly out;
    for (const auto& [e1, w1] : a.coeffs_)
      for (const auto& [e2, w2] : b.coeffs_) out.add(e1 + e2, stuffle(w1, w2));
    return out;
  }

  friend bool operator==(const TPoly&, const TPoly&) = default;

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [e, w] : coeffs_) {
      if (!s.empty()) s += " + ";
      s += "T^" + std::to_string(e) + "*[" + w.to_string() + "]";
    }
    return s;
  }

 private:
  Map coeffs_;
};

namespace detail {

struct RegularizeMemo {
  std::mutex mutex;
  std::map<Composition, TPoly> table;
};

inline RegularizeMemo& regularize_memo() {
  static RegularizeMemo memo;
  return memo;
}

}  // namespace detail

/// Stuffle regularization with T = zeta*(1).
///
/// For c = (w', 1) the product (1) * w' contains c with multiplicity equal to
/// the number of trailing ones of c; every other word of the product has
/// strictly fewer trailing ones, so solving for c terminates.
inline TPoly regularize(const Composition& c) {
  if (c.is_admissible()) return TPoly(WordCombo(c));

  auto& memo = detail::regularize_memo();
  {
    std::lock_guard lock(memo.mutex);
    if (auto it = memo.table.find(c); it != memo.table.end()) return it->second;
  }

  const Composition head = c.without_back();
  const WordCombo product = stuffle(Composition{1}, head);
  const Rational multiplicity = static_cast<long>(c.trailing_ones());

  TPoly out = TPoly::t() * regularize(head);
  for (const auto& [u, q] : product) {
    if (u == c) continue;
    out.add(regularize(u), -q);
  }
  out *= 1 / multiplicity;

  std::lock_guard lock(memo.mutex);
  memo.table.emplace(c, out);
  return out;
}

inline TPoly regularize(const WordCombo& w) {
  TPoly out;
  for (const auto& [c, q] : w) out.add(regularize(c), q);
  return out;
}

/// Regularized expansion of
///   sum_{i=0}^{j} (-1)^i zeta^{star,*}(k_1..k_i) zeta^*(k_j, ..., k_{i+1}).
/// Vanishes identically for j > 0.
inline TPoly antipode_combo(int j, const Composition& c) {
  if (j < 0 || static_cast<std::size_t>(j) > c.depth())
    throw precondition_error("antipode_combo: j must lie in [0, depth]");
  WordCombo sum;
  for (int i = 0; i <= j; ++i) {
    const WordCombo star = star_expand(c.slice(0, i));
    const WordCombo rev(c.slice(i, j).reversed());
    sum.add(stuffle(star, rev), i % 2 == 0 ? 1 : -1);
  }
  return regularize(sum);
}

}  // namespace mzv
