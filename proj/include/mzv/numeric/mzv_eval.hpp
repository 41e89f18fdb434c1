#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "mzv/numeric/precision.hpp"
#include "mzv/parity_reduction.hpp"

namespace mzv {

// Iterated-integral words. A composition (k_1, ..., k_d) corresponds to the
// word  0^{k_d-1} 1 0^{k_{d-1}-1} 1 ... 0^{k_1-1} 1  read from the upper
// endpoint down, with 0 = dt/t and 1 = dt/(1-t).

inline std::string iterated_word(const Composition& c) {
  std::string w;
  for (auto it = c.parts().rbegin(); it != c.parts().rend(); ++it) {
    w.append(static_cast<std::size_t>(*it - 1), '0');
    w.push_back('1');
  }
  return w;
}

/// Inverse of iterated_word; the word must be empty or end in '1'.
inline Composition word_composition(const std::string& w) {
  if (!w.empty() && w.back() != '1') throw precondition_error("word_composition: word must end in 1");
  std::vector<int> rev;
  int run = 1;
  for (char ch : w) {
    if (ch == '0') {
      ++run;
    } else {
      rev.push_back(run);
      run = 1;
    }
  }
  return Composition(std::vector<int>(rev.rbegin(), rev.rend()));
}

/// Reverse the word and swap the letters (the substitution t -> 1 - t).
inline std::string dual_word(const std::string& w) {
  std::string d(w.rbegin(), w.rend());
  for (char& ch : d) ch = ch == '0' ? '1' : '0';
  return d;
}

namespace detail {

/// Terms n <= N needed so that sum_{n>N} 2^-n (1 + ln n)^depth < 10^-digits.
inline long half_series_terms(int digits, std::size_t depth) {
  const double target = digits * std::log2(10.0) + 6;
  long n = 16;
  while (n - depth * std::log2(1 + std::log(2.0 * n)) < target) ++n;
  return n;
}

/// Incrementally maintained n^-1, n^-2, ..., n^-max_exp.
class InversePowers {
 public:
  explicit InversePowers(int max_exp) : pw_(static_cast<std::size_t>(max_exp) + 1) {}
  void set(long n) {
    pw_[0] = 1;
    if (pw_.size() > 1) pw_[1] = Real(1) / n;
    for (std::size_t e = 2; e < pw_.size(); ++e) pw_[e] = pw_[e - 1] * pw_[1];
  }
  const Real& operator[](int e) const { return pw_[static_cast<std::size_t>(e)]; }

 private:
  std::vector<Real> pw_;
};

}  // namespace detail

/// sum_{0<n_1<...<n_m} 2^{-n_m} / (n_1^{l_1} ... n_m^{l_m}); converges geometrically.
inline Real polylog_half(const Composition& l, const PrecisionContext& ctx) {
  if (l.empty()) return Real(1);
  PrecisionContext::Scope scope(ctx);
  const std::size_t m = l.depth();
  const long terms = detail::half_series_terms(ctx.working_digits(), m);
  int max_exp = 0;
  for (int k : l) max_exp = std::max(max_exp, k);
  detail::InversePowers inv(max_exp);

  // nested[j] = sum over n_1 < ... < n_j <= n of prod_{i<=j} n_i^{-l_i}
  std::vector<Real> nested(m, Real(0));
  nested[0] = 1;
  Real scale = 1;
  Real sum = 0;
  for (long n = 1; n <= terms; ++n) {
    inv.set(n);
    scale /= 2;
    sum += scale * inv[l[m - 1]] * nested[m - 1];
    for (std::size_t j = m - 1; j >= 1; --j) nested[j] += nested[j - 1] * inv[l[j - 1]];
  }
  return sum;
}

namespace detail {

inline Real cached_polylog_half(const std::string& word, const PrecisionContext& ctx) {
  auto& cache = ctx.cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.polylog_half.find(word); it != cache.polylog_half.end()) return it->second;
  }
  Real v = polylog_half(word_composition(word), ctx);
  std::lock_guard lock(cache.mutex);
  cache.polylog_half.emplace(word, v);
  return v;
}

}  // namespace detail

/// Admissible multiple zeta value.
///
/// Splits the iterated integral over [0,1] at 1/2. The piece over [1/2,1]
/// becomes a dual word over [0,1/2] after t -> 1 - t, so
///   zeta(w) = sum_{w = u v} Li_{dual(u)}(1/2) Li_v(1/2),
/// and every factor is a nested sum with ratio 1/2.
inline Estimate<Real> eval_admissible_mzv(const Composition& c, const PrecisionContext& ctx) {
  if (!c.is_admissible()) throw precondition_error("eval_admissible_mzv: composition (" + c.to_string() + ") is not admissible");
  PrecisionContext::Scope scope(ctx);
  if (c.empty()) return {Real(1), Real(0)};

  auto& cache = ctx.cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.mzv.find(c); it != cache.mzv.end()) return it->second;
  }

  const std::string w = iterated_word(c);
  Real sum = 0;
  for (std::size_t p = 0; p <= w.size(); ++p) {
    const std::string upper = dual_word(w.substr(0, p));
    const std::string lower = w.substr(p);
    sum += detail::cached_polylog_half(upper, ctx) * detail::cached_polylog_half(lower, ctx);
  }
  const Real bound = 4 * Real(w.size() + 1) * boost::multiprecision::pow(Real(10), -ctx.working_digits());
  Estimate<Real> result{sum, bound};

  std::lock_guard lock(cache.mutex);
  cache.mzv.emplace(c, result);
  return result;
}

/// Truncated nested sum over m_d <= terms, with the tail bounded by
///   sum_{n>N} (1 + ln n)^{d-1} n^{-k_d} <= int_N^inf (1 + ln x)^{d-1} x^{-k_d} dx.
/// Slow (algebraic convergence); used as an independent oracle.
inline Estimate<Real> eval_mzv_truncated(const Composition& c, const PrecisionContext& ctx, long terms) {
  if (c.empty() || !c.is_admissible())
    throw precondition_error("eval_mzv_truncated: composition must be nonempty and admissible");
  if (terms < 100) throw precondition_error("eval_mzv_truncated: need at least 100 terms");
  PrecisionContext::Scope scope(ctx);
  const std::size_t d = c.depth();
  int max_exp = 0;
  for (int k : c) max_exp = std::max(max_exp, k);
  detail::InversePowers inv(max_exp);
  std::vector<Real> nested(d + 1, Real(0));
  nested[0] = 1;
  for (long n = 1; n <= terms; ++n) {
    inv.set(n);
    for (std::size_t j = d; j >= 1; --j) nested[j] += nested[j - 1] * inv[c[j - 1]];
  }

  // I_m = (1 + ln N)^m N^{1-s}/(s-1) + m/(s-1) I_{m-1}
  const Real s = c.back();
  const Real log_term = 1 + boost::multiprecision::log(Real(terms));
  const Real base = boost::multiprecision::pow(Real(terms), 1 - s) / (s - 1);
  Real integral = base;
  Real log_pow = 1;
  for (std::size_t m = 1; m < d; ++m) {
    log_pow *= log_term;
    integral = log_pow * base + Real(m) / (s - 1) * integral;
  }
  return {nested[d], integral};
}

/// Riemann zeta at an integer s >= 2 by Borwein's alternating-series algorithm.
inline Real zeta_single(int s, const PrecisionContext& ctx) {
  if (s < 2) throw precondition_error("zeta_single: s must be >= 2");
  auto& cache = ctx.cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.zeta_single.find(s); it != cache.zeta_single.end()) return it->second;
  }
  PrecisionContext::Scope scope(ctx);
  // error <= 3 (3 + sqrt 8)^-n / |1 - 2^{1-s}|
  const int n = static_cast<int>(std::ceil((ctx.working_digits() + 2) / std::log10(3 + std::sqrt(8.0)))) + 2;
  std::vector<Real> dk(static_cast<std::size_t>(n) + 1);
  Rational acc = 0;
  Rational term = 1;  // i = 0
  for (int i = 0; i <= n; ++i) {
    // term_i = n (n+i-1)! 4^i / ((n-i)! (2i)!)
    if (i > 0) term = term * 4 * (n + i - 1) * (n - i + 1) / ((2 * i - 1) * (2 * i));
    acc += term;
    dk[static_cast<std::size_t>(i)] = to_real(acc);
  }
  const Real& dn = dk[static_cast<std::size_t>(n)];
  Real sum = 0;
  for (int k = 0; k < n; ++k) {
    Real t = (dk[static_cast<std::size_t>(k)] - dn) / boost::multiprecision::pow(Real(k + 1), s);
    if (k % 2) t = -t;
    sum += t;
  }
  Real v = -sum / (dn * (1 - boost::multiprecision::pow(Real(2), 1 - s)));
  std::lock_guard lock(cache.mutex);
  cache.zeta_single.emplace(s, v);
  return v;
}

/// Substitutes T = t_value into a TPoly and evaluates each admissible word.
inline Estimate<Real> eval_tpoly(const TPoly& p, const Real& t_value_in, const PrecisionContext& ctx) {
  const Real t_value = ctx.at_working_precision(t_value_in);
  PrecisionContext::Scope scope(ctx);
  Real sum = 0;
  Real bound = 0;
  Real t_pow = 1;
  int e_prev = 0;
  for (const auto& [e, w] : p) {
    while (e_prev < e) {
      t_pow *= t_value;
      ++e_prev;
    }
    for (const auto& [c, q] : w) {
      const auto v = eval_admissible_mzv(c, ctx);
      const Real qr = to_real(q);
      sum += qr * t_pow * v.value;
      bound += boost::multiprecision::abs(qr * t_pow) * v.error_bound;
    }
  }
  return {sum, bound};
}

inline Estimate<Real> eval_pigraded(const PiGradedExpr& e, const Real& t_value_in, const PrecisionContext& ctx) {
  const Real t_value = ctx.at_working_precision(t_value_in);
  PrecisionContext::Scope scope(ctx);
  Real sum = 0;
  Real bound = 0;
  for (const auto& [pe, p] : e) {
    const auto v = eval_tpoly(p, t_value, ctx);
    const Real pi_pow = boost::multiprecision::pow(ctx.pi(), pe);
    sum += pi_pow * v.value;
    bound += pi_pow * v.error_bound;
  }
  return {sum, bound};
}

inline Real eval_pi_term(const PiTerm& t, const PrecisionContext& ctx) {
  PrecisionContext::Scope scope(ctx);
  return to_real(t.coeff) * boost::multiprecision::pow(ctx.pi(), t.pi_exp);
}

}  // namespace mzv
