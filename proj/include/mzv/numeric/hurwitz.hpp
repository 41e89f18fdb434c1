#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "mzv/numeric/mzv_eval.hpp"

namespace mzv {

/// Truncated power series in z; coefficient a at index a.
using Series = std::vector<Real>;

namespace detail {

inline Series series_zero(int order) { return Series(static_cast<std::size_t>(order) + 1, Real(0)); }

inline Series series_one(int order) {
  Series s = series_zero(order);
  s[0] = 1;
  return s;
}

/// f / (n + z)
inline void series_divide_linear(Series& f, const Real& inv_n) {
  f[0] *= inv_n;
  for (std::size_t a = 1; a < f.size(); ++a) f[a] = (f[a] - f[a - 1]) * inv_n;
}

inline Series series_mul(const Series& f, const Series& g) {
  Series out(f.size(), Real(0));
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (f[a] == 0) continue;
    for (std::size_t b = 0; a + b < out.size(); ++b) out[a + b] += f[a] * g[b];
  }
  return out;
}

inline void series_axpy(Series& y, const Real& s, const Series& x) {
  for (std::size_t a = 0; a < y.size(); ++a) y[a] += s * x[a];
}

/// (1/2)^z = exp(-z ln 2)
inline Series half_power_series(int order) {
  Series s = series_zero(order);
  const Real l2 = boost::multiprecision::log(Real(2));
  s[0] = 1;
  for (std::size_t a = 1; a < s.size(); ++a) s[a] = -s[a - 1] * l2 / Real(a);
  return s;
}

/// 2^{-z} sum_{0<n_1<...<n_m} 2^{-n_m} prod_j (n_j + z)^{-l_j}, as a series in z.
/// This is the lower half [0, 1/2] of the iterated integral whose innermost
/// form carries the weight t^z.
inline Series lerch_half_series(const Composition& l, int order, const PrecisionContext& ctx) {
  const std::size_t m = l.depth();
  const long terms = half_series_terms(ctx.working_digits(), m + 1);
  std::vector<Series> nested(m, series_zero(order));
  nested[0] = series_one(order);
  Series sum = series_zero(order);
  Series term;
  Real scale = 1;
  for (long n = 1; n <= terms; ++n) {
    const Real inv_n = Real(1) / n;
    scale /= 2;
    term = nested[m - 1];
    for (int r = 0; r < l[m - 1]; ++r) series_divide_linear(term, inv_n);
    series_axpy(sum, scale, term);
    for (std::size_t j = m - 1; j >= 1; --j) {
      term = nested[j - 1];
      for (int r = 0; r < l[j - 1]; ++r) series_divide_linear(term, inv_n);
      for (std::size_t a = 0; a < term.size(); ++a) nested[j][a] += term[a];
    }
  }
  return series_mul(sum, half_power_series(order));
}

inline Series cached_lerch_half_series(const std::string& word, int order, const PrecisionContext& ctx) {
  auto& cache = ctx.cache();
  const auto key = std::make_pair(word, order);
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.lerch_series.find(key); it != cache.lerch_series.end()) return it->second;
  }
  Series s = lerch_half_series(word_composition(word), order, ctx);
  std::lock_guard lock(cache.mutex);
  cache.lerch_series.emplace(key, s);
  return s;
}

/// Upper half [1/2, 1] of the full word with the t^z weight on its innermost
/// form. After t -> 1 - s it reads
///   int_0^{1/2} (1-s)^z / s * H(s) ds,   H(s) = sum_n h_n s^n,
/// with H the dual of the word minus its innermost letter. The integrals
/// J_n(z) = int_0^{1/2} s^{n-1} (1-s)^z ds obey
///   J_{n+1} = (n J_n - 2^{-n} (1/2)^{z+1}) / (n + 1 + z).
inline Series upper_half_series(const std::string& word, int order, const PrecisionContext& ctx) {
  const std::string inner = dual_word(word.substr(0, word.size() - 1));
  const Composition l = word_composition(inner);
  const std::size_t m = l.depth();
  const long terms = half_series_terms(ctx.working_digits(), m + 1);

  const Series half_z = half_power_series(order);
  Series half_z1 = half_z;  // (1/2)^{z+1}
  for (auto& v : half_z1) v /= 2;

  // J_1 = (1 - (1/2)^{z+1}) / (1 + z)
  Series j_n = series_zero(order);
  for (std::size_t a = 0; a < j_n.size(); ++a) j_n[a] = -half_z1[a];
  j_n[0] += 1;
  series_divide_linear(j_n, Real(1));

  int max_exp = 0;
  for (int k : l) max_exp = std::max(max_exp, k);
  InversePowers inv(max_exp);
  std::vector<Real> nested(m, Real(0));
  nested[0] = 1;

  Series sum = series_zero(order);
  Real two_pow = 1;  // 2^{-(n-1)}
  for (long n = 1; n <= terms; ++n) {
    inv.set(n);
    const Real h = inv[l[m - 1]] * nested[m - 1];
    series_axpy(sum, h, j_n);
    for (std::size_t j = m - 1; j >= 1; --j) nested[j] += nested[j - 1] * inv[l[j - 1]];

    // advance J_n -> J_{n+1}
    two_pow /= 2;  // 2^{-n}
    for (std::size_t a = 0; a < j_n.size(); ++a) j_n[a] = Real(n) * j_n[a] - two_pow * half_z1[a];
    series_divide_linear(j_n, Real(1) / (n + 1));
  }
  return sum;
}

/// Taylor coefficients of the Hurwitz MZV zeta^{(z)}(c) at z = 0 for admissible c.
inline Series hurwitz_series_admissible(const Composition& c, int order, const PrecisionContext& ctx) {
  if (c.empty()) return series_one(order);
  auto& cache = ctx.cache();
  const auto key = std::make_pair(c, order);
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.hurwitz_series.find(key); it != cache.hurwitz_series.end()) return it->second;
  }
  const std::string w = iterated_word(c);
  Series sum = upper_half_series(w, order, ctx);
  for (std::size_t p = 0; p < w.size(); ++p) {
    const Real upper = cached_polylog_half(dual_word(w.substr(0, p)), ctx);
    series_axpy(sum, upper, cached_lerch_half_series(w.substr(p), order, ctx));
  }
  std::lock_guard lock(cache.mutex);
  cache.hurwitz_series.emplace(key, sum);
  return sum;
}

}  // namespace detail

/// Taylor coefficients zeta^*_a(c), a = 0..order, of the stuffle regularized
/// Hurwitz MZV zeta^{(z),*}(c), with T substituted by t_value.
///
/// Non-admissible c is written as sum_t W_t * (1)^{*t} with admissible W_t
/// (this is what regularize computes); the series is a stuffle homomorphism,
/// and zeta^{(z),*}(1) = T + sum_{a>=1} (-1)^a zeta(a+1) z^a.
inline Series hurwitz_taylor_coefficients(const Composition& c, int order, const Real& t_value_in,
                                          const PrecisionContext& ctx) {
  const Real t_value = ctx.at_working_precision(t_value_in);
  if (order < 0) throw precondition_error("hurwitz_taylor_coefficients: order must be >= 0");
  PrecisionContext::Scope scope(ctx);
  if (c.is_admissible()) return detail::hurwitz_series_admissible(c, order, ctx);

  Series t_series = detail::series_zero(order);
  t_series[0] = t_value;
  for (int a = 1; a <= order; ++a) t_series[static_cast<std::size_t>(a)] = (a % 2 ? -1 : 1) * zeta_single(a + 1, ctx);

  Series out = detail::series_zero(order);
  Series t_pow = detail::series_one(order);
  int e_prev = 0;
  for (const auto& [e, w] : regularize(c)) {
    while (e_prev < e) {
      t_pow = detail::series_mul(t_pow, t_series);
      ++e_prev;
    }
    Series inner = detail::series_zero(order);
    for (const auto& [word, q] : w) detail::series_axpy(inner, to_real(q), detail::hurwitz_series_admissible(word, order, ctx));
    detail::series_axpy(out, Real(1), detail::series_mul(t_pow, inner));
  }
  return out;
}

/// Horner evaluation of a series at z.
inline ComplexHP eval_series(const Series& s, const ComplexHP& z) {
  ComplexHP acc;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    acc *= z;
    acc.re += *it;
  }
  return acc;
}

namespace detail {

/// C |z|^{A+1} / (1 - |z|) with C taken from the largest of the last few coefficients.
inline Real series_tail_bound(const Series& s, const Real& radius) {
  if (radius == 0) return Real(0);
  Real c = 0;
  const std::size_t n = s.size();
  for (std::size_t a = n > 4 ? n - 4 : 0; a < n; ++a) c = std::max(c, Real(boost::multiprecision::abs(s[a])));
  return 4 * c * boost::multiprecision::pow(radius, static_cast<long>(n)) / (1 - radius);
}

inline void require_taylor_disc(const ComplexHP& z, const char* who) {
  if (abs(z) > Real(0.5) + Real(1e-30)) throw precondition_error(std::string(who) + ": requires |z| <= 1/2");
}

}  // namespace detail

/// zeta^{(z),*}(c) = sum_{a=0}^{A} z^a zeta^*_a(c) for |z| <= 1/2.
inline Estimate<ComplexHP> eval_hurwitz_taylor(const Composition& c, const ComplexHP& z_in, const PrecisionContext& ctx,
                                               const Real& t_value = Real(0)) {
  const ComplexHP z = ctx.at_working_precision(z_in);
  if (c.empty()) throw precondition_error("eval_hurwitz_taylor: composition must be nonempty");
  PrecisionContext::Scope scope(ctx);
  detail::require_taylor_disc(z, "eval_hurwitz_taylor");
  const Real radius = abs(z);
  const int order = ctx.taylor_terms(static_cast<double>(radius));
  const Series s = hurwitz_taylor_coefficients(c, order, t_value, ctx);
  Real bound = detail::series_tail_bound(s, radius) + ctx.tolerance() / 100;
  return {eval_series(s, z), bound};
}

// ---------------------------------------------------------------------------
// Direct nested sums with an Euler-Maclaurin tail.

namespace detail {

/// Asymptotic series sum_p coeff[p] x^{-p}, p = 0..max_power.
using AsymptoticSeries = std::vector<Rational>;

/// Expansion of sum_{n>=1} (x + n)^{-p}, p >= 2:
///   x^{1-p}/(p-1) - x^{-p}/2 + sum_{j>=1} B_{2j}/(2j)! (p)_{2j-1} x^{-p-2j+1}.
inline AsymptoticSeries hurwitz_tail_expansion(int p, int max_power) {
  AsymptoticSeries out(static_cast<std::size_t>(max_power) + 1, Rational(0));
  if (p - 1 <= max_power) out[static_cast<std::size_t>(p - 1)] += Rational(1, p - 1);
  if (p <= max_power) out[static_cast<std::size_t>(p)] -= Rational(1, 2);
  Rational poch = p;  // (p)_{2j-1}
  for (int j = 1; p + 2 * j - 1 <= max_power; ++j) {
    if (j > 1) poch *= Rational((p + 2 * j - 3) * (p + 2 * j - 2));
    out[static_cast<std::size_t>(p + 2 * j - 1)] += bernoulli(2 * j) / Rational(factorial(2 * j)) * poch;
  }
  return out;
}

/// Asymptotic series of sum_{x < n_1 < ... < n_r} prod (n_j)^{-l_j} in powers of
/// 1/x, built from the outermost index inward.
inline AsymptoticSeries nested_tail_expansion(const Composition& l, int max_power) {
  AsymptoticSeries acc = hurwitz_tail_expansion(l.back(), max_power);
  for (std::size_t j = l.depth() - 1; j >= 1; --j) {
    AsymptoticSeries next(acc.size(), Rational(0));
    const int shift = l[j - 1];
    for (std::size_t p = 0; p < acc.size(); ++p) {
      if (acc[p] == 0) continue;
      const int power = static_cast<int>(p) + shift;
      if (power > max_power) continue;
      const AsymptoticSeries inner = hurwitz_tail_expansion(power, max_power);
      for (std::size_t q = 0; q < inner.size(); ++q)
        if (inner[q] != 0) next[q] += acc[p] * inner[q];
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace detail

/// Hurwitz MZV zeta^{(z)}(c) for admissible c by direct summation:
///   zeta^{(z)}(c) = sum_{i=0}^{d} P_N(k_1..k_i) Tail_N(k_{i+1}..k_d),
/// where P_N restricts every index to <= N and Tail_N to > N. Tails use the
/// Euler-Maclaurin expansion in 1/(N + z).
inline Estimate<ComplexHP> eval_hurwitz_direct(const Composition& c, const ComplexHP& z_in, const PrecisionContext& ctx) {
  const ComplexHP z = ctx.at_working_precision(z_in);
  if (c.empty() || !c.is_admissible())
    throw precondition_error("eval_hurwitz_direct: composition must be nonempty and admissible");
  PrecisionContext::Scope scope(ctx);
  if (z.im == 0 && z.re < 0 && boost::multiprecision::floor(z.re) == z.re)
    throw precondition_error("eval_hurwitz_direct: z is a pole (negative integer)");

  const double zabs = static_cast<double>(abs(z));
  const long n_cut = 512 + 2 * static_cast<long>(std::ceil(zabs));
  const int max_power = 48 + 2 * c.weight();
  const std::size_t d = c.depth();

  // partial sums over n_1 < ... < n_j <= N
  std::vector<ComplexHP> nested(d + 1);
  nested[0] = ComplexHP(Real(1));
  for (long n = 1; n <= n_cut; ++n) {
    const ComplexHP x = z + ComplexHP(Real(n));
    const ComplexHP inv = inverse(x);
    for (std::size_t j = d; j >= 1; --j) nested[j] += nested[j - 1] * pow(inv, c[j - 1]);
  }

  const ComplexHP x = z + ComplexHP(Real(n_cut));
  const ComplexHP inv_x = inverse(x);
  std::vector<ComplexHP> inv_pows(static_cast<std::size_t>(max_power) + 1);
  inv_pows[0] = ComplexHP(Real(1));
  for (std::size_t p = 1; p < inv_pows.size(); ++p) inv_pows[p] = inv_pows[p - 1] * inv_x;

  ComplexHP value = nested[d];
  Real bound = 0;
  for (std::size_t i = 0; i < d; ++i) {
    const auto expansion = detail::nested_tail_expansion(c.slice(i, d), max_power);
    ComplexHP tail;
    Real last = 0;
    for (std::size_t p = 0; p < expansion.size(); ++p) {
      if (expansion[p] == 0) continue;
      const ComplexHP t = inv_pows[p] * to_real(expansion[p]);
      tail += t;
      if (p + 6 >= expansion.size()) last = std::max(last, abs(t));
    }
    value += nested[i] * tail;
    bound += abs(nested[i]) * 10 * last;
  }
  bound += ctx.tolerance() / 100;
  return {value, bound};
}

}  // namespace mzv
