#pragma once

#include <map>
#include <string>
#include <vector>

#include "mzv/regularize.hpp"
#include "mzv/special_numbers.hpp"

namespace mzv {

/// Finite sum  sum_m pi^{2m} * P_m(T)  with P_m a TPoly over admissible words.
class PiGradedExpr {
 public:
  using Map = std::map<int, TPoly>;

  void add(int pi_exp, const TPoly& p, const Rational& scale = 1) {
    if (pi_exp < 0 || pi_exp % 2 != 0) throw precondition_error("PiGradedExpr: pi exponent must be even and >= 0");
    if (p.is_zero() || scale == 0) return;
    auto& slot = terms_[pi_exp];
    slot.add(p, scale);
    if (slot.is_zero()) terms_.erase(pi_exp);
  }
  void add(const PiGradedExpr& o, const Rational& scale = 1) {
    for (const auto& [e, p] : o.terms_) add(e, p, scale);
  }

  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  bool is_zero() const { return terms_.empty(); }

  TPoly at(int pi_exp) const {
    auto it = terms_.find(pi_exp);
    return it == terms_.end() ? TPoly{} : it->second;
  }

  /// Highest power of T present; -1 for the zero expression.
  int t_degree() const {
    int d = -1;
    for (const auto& [e, p] : terms_) d = std::max(d, p.degree());
    return d;
  }
  int max_pi_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  std::size_t max_depth() const {
    std::size_t d = 0;
    for (const auto& [e, p] : terms_) d = std::max(d, p.max_depth());
    return d;
  }
  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& [e, p] : terms_)
      for (const auto& [t, w] : p) n += w.size();
    return n;
  }

  PiGradedExpr& operator+=(const PiGradedExpr& o) {
    add(o);
    return *this;
  }
  PiGradedExpr& operator-=(const PiGradedExpr& o) {
    add(o, -1);
    return *this;
  }
  friend PiGradedExpr operator+(PiGradedExpr a, const PiGradedExpr& b) { return a += b; }
  friend PiGradedExpr operator-(PiGradedExpr a, const PiGradedExpr& b) { return a -= b; }
  friend bool operator==(const PiGradedExpr&, const PiGradedExpr&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, p] : terms_) {
      for (const auto& [t, w] : p) {
        for (const auto& [c, q] : w) {
          std::string coeff = q.str();
          if (!s.empty()) {
            if (coeff.front() == '-') {
              s += " - ";
              coeff.erase(0, 1);
            } else {
              s += " + ";
            }
          }
          std::vector<std::string> parts;
          if (coeff != "1" || (e == 0 && t == 0 && c.empty())) parts.push_back(coeff);
          if (e > 0) parts.push_back("pi^" + std::to_string(e));
          if (t > 0) parts.push_back("T^" + std::to_string(t));
          if (!c.empty()) parts.push_back("z(" + c.to_string() + ")");
          for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "*" : "") + parts[i];
        }
      }
    }
    return s;
  }

 private:
  Map terms_;
};

/// One factor of an unexpanded product: zeta^*(c), zeta^{star,*}(c) or zeta^*_a(c).
struct Factor {
  enum class Kind { plain, star, shifted };
  Kind kind = Kind::plain;
  int shift = 0;
  Composition args;

  WordCombo words() const {
    switch (kind) {
      case Kind::plain: return WordCombo(args);
      case Kind::star: return star_expand(args);
      case Kind::shifted: return shift_expand(shift, args);
    }
    return {};
  }
};

/// coeff * pi^pi_exp * prod(factors), before stuffle expansion.
struct DisplayTerm {
  Rational coeff;
  int pi_exp = 0;
  std::vector<Factor> factors;
};

using DisplayForm = std::vector<DisplayTerm>;

/// Expands each product by stuffle and regularizes it.
inline PiGradedExpr expand(const DisplayForm& form) {
  PiGradedExpr out;
  for (const auto& term : form) {
    WordCombo product = WordCombo::unit();
    for (const auto& f : term.factors) product = stuffle(product, f.words());
    out.add(term.pi_exp, regularize(product), term.coeff);
  }
  return out;
}

namespace detail {

inline int sign(long e) { return e % 2 == 0 ? 1 : -1; }

inline int partial_weight(const Composition& c, std::size_t first, std::size_t last) {
  int s = 0;
  for (std::size_t i = first; i < last; ++i) s += c[i];
  return s;
}

/// 2^{2m} B_{2m} / (2m)!, the rational part of (2 pi)^{2m} B_{2m} / (2m)!.
inline Rational bernoulli_weight(int m) {
  return Rational(Integer(1) << (2 * m)) * bernoulli(2 * m) / Rational(factorial(2 * m));
}

inline void push_product(DisplayForm& form, Rational coeff, int pi_exp, std::vector<Factor> factors) {
  if (coeff == 0) return;
  std::vector<Factor> kept;
  for (auto& f : factors) {
    if (f.args.empty()) {
      // zeta^*_a(()) = [a = 0]
      if (f.kind == Factor::Kind::shifted && f.shift != 0) return;
      continue;
    }
    kept.push_back(std::move(f));
  }
  form.push_back(DisplayTerm{std::move(coeff), pi_exp, std::move(kept)});
}

/// sum_{0<=i<j<=d} sum_{a+2m+b=k_j} sign(i,j,a,m,b) * scale * (2pi)^{2m} B_{2m}/(2m)!
///   * zeta^{star,*}(k_1..k_i) zeta^*_a(k_{j-1}..k_{i+1}) zeta^*_b(k_{j+1}..k_d)
template <class SignFn>
void push_triple_sum(DisplayForm& form, const Composition& c, const Rational& scale, SignFn sign_of) {
  const std::size_t d = c.depth();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j <= d; ++j) {
      const int kj = c[j - 1];
      const Composition head = c.slice(0, i);
      const Composition middle = c.slice(i, j - 1).reversed();
      const Composition tail = c.slice(j, d);
      for (int m = 0; 2 * m <= kj; ++m) {
        const Rational bw = bernoulli_weight(m);
        for (int a = 0; a + 2 * m <= kj; ++a) {
          const int b = kj - 2 * m - a;
          const Rational coeff = scale * bw * sign_of(static_cast<int>(i), static_cast<int>(j), m, b);
          push_product(form, coeff, 2 * m,
                       {Factor{Factor::Kind::star, 0, head}, Factor{Factor::Kind::shifted, a, middle},
                        Factor{Factor::Kind::shifted, b, tail}});
        }
      }
    }
  }
}

inline void require_opposite_parity(const Composition& c) {
  if ((c.weight() - static_cast<int>(c.depth())) % 2 == 0)
    throw precondition_error("weight and depth have the same parity");
}

}  // namespace detail

/// Unexpanded right-hand side of the parity reduction of zeta^*(c).
/// With include_delta = false the delta correction sum is dropped (it vanishes
/// when k_d >= 2).
inline DisplayForm parity_reduction_display(const Composition& c, bool include_delta) {
  detail::require_opposite_parity(c);
  const std::size_t d = c.depth();
  DisplayForm form;

  form.push_back(DisplayTerm{Rational(1, 2), 0, {Factor{Factor::Kind::plain, 0, c}}});
  form.push_back(DisplayTerm{Rational(-1, 2), 0, {Factor{Factor::Kind::star, 0, c}}});

  if (include_delta) {
    for (std::size_t i = 0; i < d; ++i) {
      const PiTerm dl = delta(c.slice(i, d));
      if (dl.is_zero()) continue;
      const Rational coeff = Rational(-1, 2) * detail::sign(static_cast<long>(d - i)) * dl.coeff;
      detail::push_product(form, coeff, dl.pi_exp, {Factor{Factor::Kind::star, 0, c.slice(0, i)}});
    }
  }

  detail::push_triple_sum(form, c, Rational(-1, 2), [&](int i, int j, int m, int b) {
    return detail::sign(m + i + b + detail::partial_weight(c, 0, j));
  });
  return form;
}

/// Explicit parity reduction valid for every opposite-parity composition,
/// admissible or not. Throws precondition_error on same parity.
inline PiGradedExpr reduce_main3(const Composition& c) {
  return expand(parity_reduction_display(c, true));
}

/// Parity reduction of an admissible zeta(c). The result has T-degree 0 and
/// only words of depth <= depth(c) - 1.
inline PiGradedExpr reduce_main(const Composition& c) {
  if (c.empty()) throw precondition_error("reduce_main: composition must be nonempty");
  if (!c.is_admissible()) throw precondition_error("reduce_main: composition must be admissible (last part >= 2)");
  return expand(parity_reduction_display(c, false));
}

/// LHS - RHS of the identity
///   (-1)^d zeta^{star,*}(c) - (-1)^{wt} zeta^*(c)
///     = -sum_i (-1)^i zeta^{star,*}(k_1..k_i) delta^{k_{i+1}..k_d}
///       + sum_{i<j} sum_{a+2m+b=k_j} (-1)^{i+b+k_{j+1}+..+k_d+m} (2pi)^{2m} B_{2m}/(2m)!
///         * zeta^{star,*}(k_1..k_i) zeta^*_a(k_{j-1}..k_{i+1}) zeta^*_b(k_{j+1}..k_d).
/// Evaluates to zero numerically; it is generally not zero as a formal expression.
inline DisplayForm main2_identity_display(const Composition& c) {
  if (c.empty()) throw precondition_error("build_main2_identity: composition must be nonempty");
  const std::size_t d = c.depth();
  const int w = c.weight();
  DisplayForm form;
  form.push_back(DisplayTerm{Rational(detail::sign(static_cast<long>(d))), 0, {Factor{Factor::Kind::star, 0, c}}});
  form.push_back(DisplayTerm{Rational(-detail::sign(w)), 0, {Factor{Factor::Kind::plain, 0, c}}});
  for (std::size_t i = 0; i < d; ++i) {
    const PiTerm dl = delta(c.slice(i, d));
    if (dl.is_zero()) continue;
    detail::push_product(form, detail::sign(static_cast<long>(i)) * dl.coeff, dl.pi_exp,
                         {Factor{Factor::Kind::star, 0, c.slice(0, i)}});
  }
  detail::push_triple_sum(form, c, Rational(-1), [&](int i, int j, int m, int b) {
    return detail::sign(i + b + detail::partial_weight(c, j, d) + m);
  });
  return form;
}

inline PiGradedExpr build_main2_identity(const Composition& c) { return expand(main2_identity_display(c)); }

/// LHS - RHS of
///   sum_{j=0}^{d} (-1)^{k_{j+1}+..+k_d} zeta^*(k_j..k_1) zeta^*(k_{j+1}..k_d)
///     = delta^{c} + sum_{j=1}^{d} sum_{a+2m+b=k_j} (-1)^{b+k_{j+1}+..+k_d+m+1}
///       (2pi)^{2m} B_{2m}/(2m)! zeta^*_a(k_{j-1}..k_1) zeta^*_b(k_{j+1}..k_d).
inline DisplayForm fund_eq2_identity_display(const Composition& c) {
  if (c.empty()) throw precondition_error("fund_eq2: composition must be nonempty");
  const std::size_t d = c.depth();
  DisplayForm form;
  for (std::size_t j = 0; j <= d; ++j) {
    detail::push_product(form, detail::sign(detail::partial_weight(c, j, d)), 0,
                         {Factor{Factor::Kind::plain, 0, c.slice(0, j).reversed()},
                          Factor{Factor::Kind::plain, 0, c.slice(j, d)}});
  }
  const PiTerm dl = delta(c);
  if (!dl.is_zero()) detail::push_product(form, -dl.coeff, dl.pi_exp, {});
  for (std::size_t j = 1; j <= d; ++j) {
    const int kj = c[j - 1];
    const Composition head = c.slice(0, j - 1).reversed();
    const Composition tail = c.slice(j, d);
    for (int m = 0; 2 * m <= kj; ++m) {
      const Rational bw = detail::bernoulli_weight(m);
      for (int a = 0; a + 2 * m <= kj; ++a) {
        const int b = kj - 2 * m - a;
        const int s = detail::sign(b + detail::partial_weight(c, j, d) + m + 1);
        detail::push_product(form, -s * bw, 2 * m,
                             {Factor{Factor::Kind::shifted, a, head}, Factor{Factor::Kind::shifted, b, tail}});
      }
    }
  }
  return form;
}

inline PiGradedExpr fund_eq2_identity(const Composition& c) { return expand(fund_eq2_identity_display(c)); }

/// True iff every word in e has depth <= d - 1.
inline bool expand_depth_certificate(const PiGradedExpr& e, int d) {
  for (const auto& [pe, p] : e)
    for (const auto& [t, w] : p)
      for (const auto& [c, q] : w)
        if (static_cast<int>(c.depth()) > d - 1) return false;
  return true;
}

}  // namespace mzv
