#pragma once

#include <cmath>
#include <vector>

#include "mzv/numeric/hurwitz.hpp"

namespace mzv {

namespace detail {

inline bool is_integer(const ComplexHP& z) { return z.im == 0 && boost::multiprecision::floor(z.re) == z.re; }

/// Distance from Re z to the nearest integer; lower-bounds |z + m| for the two closest m.
inline Real distance_to_integers(const ComplexHP& z) {
  const Real frac = z.re - boost::multiprecision::floor(z.re);
  const Real dx = std::min(frac, Real(1 - frac));
  return boost::multiprecision::sqrt(dx * dx + z.im * z.im);
}

/// cot(x + iy) = (sin 2x - i sinh 2y) / (cosh 2y - cos 2x).
inline ComplexHP cot(const ComplexHP& w) {
  const Real x2 = 2 * w.re;
  const Real y2 = 2 * w.im;
  const Real den = boost::multiprecision::cosh(y2) - boost::multiprecision::cos(x2);
  return {boost::multiprecision::sin(x2) / den, -boost::multiprecision::sinh(y2) / den};
}

/// P_s with Psi_s(z) = pi^s P_s(cot pi z): P_1 = u, P_{s+1} = (1 + u^2) P_s' / s.
inline std::vector<Rational> cot_polynomial(int s) {
  std::vector<Rational> p{Rational(0), Rational(1)};
  for (int k = 1; k < s; ++k) {
    std::vector<Rational> dp(p.size() > 1 ? p.size() - 1 : 1, Rational(0));
    for (std::size_t e = 1; e < p.size(); ++e) dp[e - 1] = p[e] * static_cast<long>(e);
    std::vector<Rational> next(dp.size() + 2, Rational(0));
    for (std::size_t e = 0; e < dp.size(); ++e) {
      next[e] += dp[e] / k;
      next[e + 2] += dp[e] / k;
    }
    p = std::move(next);
  }
  return p;
}

}  // namespace detail

/// Psi_s(z) = sum_{m in Z} (z + m)^{-s}, Eisenstein-summed for s = 1 (pi cot pi z).
inline Estimate<ComplexHP> eval_monotangent(int s, const ComplexHP& z_in, const PrecisionContext& ctx) {
  const ComplexHP z = ctx.at_working_precision(z_in);
  if (s < 1) throw precondition_error("eval_monotangent: s must be >= 1");
  PrecisionContext::Scope scope(ctx);
  if (detail::is_integer(z)) throw precondition_error("eval_monotangent: z must not be an integer");
  const ComplexHP u = detail::cot(ctx.pi() * z);
  const auto poly = detail::cot_polynomial(s);
  ComplexHP acc;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    acc *= u;
    acc.re += to_real(*it);
  }
  acc *= boost::multiprecision::pow(ctx.pi(), s);
  // Loss from evaluating the polynomial grows with |u|^s.
  const Real scale = boost::multiprecision::pow(1 + abs(u), s) * boost::multiprecision::pow(ctx.pi(), s);
  return {acc, scale * ctx.tolerance() / 100};
}

/// Truncated multitangent sum over -M <= m_1 < ... < m_d <= M.
///
/// Any omitted term has m_1 < -M or m_d > M, so the error is at most
///   t(k_1) prod_{j>1} S_j + t(k_d) prod_{j<d} S_j,
/// with t(k) = (M - |z|)^{1-k}/(k-1) and S_j bounding sum_m |z + m|^{-k_j}
/// (by 2 dist^{-k} + 2 zeta(k) for k >= 2, and with a log(M) cutoff for k = 1).
inline Estimate<ComplexHP> eval_multitangent_direct(const Composition& c, const ComplexHP& z_in,
                                                    const PrecisionContext& ctx, long M) {
  const ComplexHP z = ctx.at_working_precision(z_in);
  if (c.empty()) throw precondition_error("eval_multitangent_direct: composition must be nonempty");
  if (c.front() < 2 || c.back() < 2)
    throw precondition_error("eval_multitangent_direct: first and last parts must be >= 2");
  if (M < 10) throw precondition_error("eval_multitangent_direct: M must be >= 10");
  PrecisionContext::Scope scope(ctx);
  if (detail::is_integer(z)) throw precondition_error("eval_multitangent_direct: z must not be an integer");
  const Real zabs = abs(z);
  if (zabs >= M / 2) throw precondition_error("eval_multitangent_direct: M too small for |z|");

  const std::size_t d = c.depth();
  int max_exp = 0;
  for (int k : c) max_exp = std::max(max_exp, k);
  std::vector<ComplexHP> nested(d + 1);
  nested[0] = ComplexHP(Real(1));
  std::vector<ComplexHP> pw(static_cast<std::size_t>(max_exp) + 1);
  for (long m = -M; m <= M; ++m) {
    pw[1] = inverse(z + ComplexHP(Real(m)));
    for (std::size_t e = 2; e < pw.size(); ++e) pw[e] = pw[e - 1] * pw[1];
    for (std::size_t j = d; j >= 1; --j) nested[j] += nested[j - 1] * pw[static_cast<std::size_t>(c[j - 1])];
  }

  const Real dist = detail::distance_to_integers(z);
  auto full_sum = [&](int k) -> Real {
    if (k == 1) return 1 / dist + 2 * (1 + boost::multiprecision::log(Real(M)));
    return 2 * boost::multiprecision::pow(dist, -k) + 2 * (1 + Real(1) / (k - 1));
  };
  auto one_side_tail = [&](int k) -> Real { return boost::multiprecision::pow(Real(M) - zabs, 1 - k) / (k - 1); };
  Real first = one_side_tail(c.front());
  Real last = one_side_tail(c.back());
  for (std::size_t j = 1; j < d; ++j) first *= full_sum(c[j]);
  for (std::size_t j = 0; j + 1 < d; ++j) last *= full_sum(c[j]);
  return {nested[d], first + last};
}

inline Estimate<ComplexHP> eval_multitangent_direct(const Composition& c, const ComplexHP& z,
                                                    const PrecisionContext& ctx) {
  return eval_multitangent_direct(c, z, ctx, ctx.direct_terms());
}

namespace detail {

/// f(-z) as a series.
inline Series reflect(Series s) {
  for (std::size_t a = 1; a < s.size(); a += 2) s[a] = -s[a];
  return s;
}

}  // namespace detail

/// Stuffle regularized multitangent for 0 < |z| <= 1/2:
///   sum_{j=0}^{d} (-1)^{K_j} zeta^{(-z),*}(k_j..k_1) zeta^{(z),*}(k_{j+1}..k_d)
///   + sum_{j=1}^{d} (-1)^{K_{j-1}} zeta^{(-z),*}(k_{j-1}..k_1) zeta^{(z),*}(k_{j+1}..k_d) z^{-k_j},
/// with K_j = k_1 + ... + k_j and each product truncated at total z-degree A.
inline Estimate<ComplexHP> eval_multitangent_regularized(const Composition& c, const ComplexHP& z_in,
                                                         const Real& t_value, const PrecisionContext& ctx) {
  const ComplexHP z = ctx.at_working_precision(z_in);
  if (c.empty()) throw precondition_error("eval_multitangent_regularized: composition must be nonempty");
  PrecisionContext::Scope scope(ctx);
  const Real radius = abs(z);
  if (radius == 0) throw precondition_error("eval_multitangent_regularized: z must be nonzero");
  detail::require_taylor_disc(z, "eval_multitangent_regularized");

  const int order = ctx.taylor_terms(static_cast<double>(radius));
  const std::size_t d = c.depth();
  std::vector<Series> head(d + 1);  // head[j]: series of zeta^{(-z),*}(k_j..k_1)
  std::vector<Series> tail(d + 1);  // tail[j]: series of zeta^{(z),*}(k_{j+1}..k_d)
  for (std::size_t j = 0; j <= d; ++j) {
    const Composition h = c.slice(0, j).reversed();
    const Composition t = c.slice(j, d);
    head[j] = h.empty() ? detail::series_one(order) : detail::reflect(hurwitz_taylor_coefficients(h, order, t_value, ctx));
    tail[j] = t.empty() ? detail::series_one(order) : hurwitz_taylor_coefficients(t, order, t_value, ctx);
  }

  ComplexHP value;
  Real bound = 0;
  int partial = 0;
  for (std::size_t j = 0; j <= d; ++j) {
    if (j > 0) partial += c[j - 1];
    const Series prod = detail::series_mul(head[j], tail[j]);
    ComplexHP term = eval_series(prod, z);
    if (partial % 2) term = -term;
    value += term;
    bound += detail::series_tail_bound(prod, radius);
  }
  partial = 0;
  for (std::size_t j = 1; j <= d; ++j) {
    const Series prod = detail::series_mul(head[j - 1], tail[j]);
    ComplexHP term = eval_series(prod, z) * pow(z, -c[j - 1]);
    if (partial % 2) term = -term;
    value += term;
    bound += detail::series_tail_bound(prod, radius) * boost::multiprecision::pow(radius, -c[j - 1]);
    partial += c[j - 1];
  }
  return {value, bound + ctx.tolerance() / 100};
}

}  // namespace mzv
