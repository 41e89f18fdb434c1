#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mzv/numeric/multitangent.hpp"
#include "mzv/numeric/mzv_eval.hpp"
#include "mzv/parity_reduction.hpp"

namespace mzv {

enum class Identity { main, main2, main3, fund_eq2, bouillot };

inline std::string identity_name(Identity id) {
  switch (id) {
    case Identity::main: return "main";
    case Identity::main2: return "main2";
    case Identity::main3: return "main3";
    case Identity::fund_eq2: return "fundeq2";
    case Identity::bouillot: return "bouillot";
  }
  return "?";
}

inline std::optional<Identity> parse_identity(std::string_view name) {
  for (Identity id : {Identity::main, Identity::main2, Identity::main3, Identity::fund_eq2, Identity::bouillot})
    if (identity_name(id) == name) return id;
  return std::nullopt;
}

enum class Status { passed, failed, skipped };

inline std::string status_name(Status s) {
  switch (s) {
    case Status::passed: return "passed";
    case Status::failed: return "failed";
    case Status::skipped: return "skipped";
  }
  return "?";
}

/// Outcome of one identity check. pass holds iff residual <= bound and every
/// structural check succeeded; skipped entries carry the violated precondition.
struct ResidualReport {
  Identity identity = Identity::main;
  Composition composition;
  std::optional<ComplexHP> z;
  std::vector<Real> t_values;
  int digits = 0;
  Real residual = 0;
  Real bound = 0;
  bool pass = false;
  Status status = Status::skipped;
  std::string reason;
  double wall_seconds = 0;
  /// Real parts; imaginary parts are kept separately for complex identities.
  ComplexHP lhs;
  ComplexHP rhs;
  /// Structural checks (main only).
  std::optional<int> t_degree;
  std::optional<bool> depth_certificate;
  /// Direct-series cross-check (bouillot only).
  std::optional<Real> cross_residual;
  std::optional<Real> cross_bound;
};

/// 10^-(digits - 5)
inline Real residual_bound(const PrecisionContext& ctx) {
  PrecisionContext::Scope scope(ctx);
  return boost::multiprecision::pow(Real(10), -(ctx.digits() - 5));
}

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline ResidualReport start_report(Identity id, const Composition& c, const PrecisionContext& ctx) {
  ResidualReport r;
  r.identity = id;
  r.composition = c;
  r.digits = ctx.digits();
  r.bound = residual_bound(ctx);
  return r;
}

inline ResidualReport& skip(ResidualReport& r, std::string reason) {
  r.status = Status::skipped;
  r.pass = false;
  r.reason = std::move(reason);
  return r;
}

inline void finish(ResidualReport& r, bool structural_ok = true) {
  r.pass = r.residual <= r.bound && structural_ok;
  if (r.cross_residual && r.cross_bound && *r.cross_residual > *r.cross_bound) r.pass = false;
  r.status = r.pass ? Status::passed : Status::failed;
}

inline bool same_parity(const Composition& c) { return (c.weight() - static_cast<int>(c.depth())) % 2 == 0; }

/// zeta^*_a(c) with T substituted; zeta^*_a of the empty word is [a = 0].
inline Real shifted_value(int a, const Composition& c, const Real& t_value, const PrecisionContext& ctx) {
  return eval_tpoly(regularize(shift_expand(a, c)), t_value, ctx).value;
}

}  // namespace detail

/// Residual of the difference form of the decomposition identity behind the
/// multitangent reduction (all symbols regularized, T substituted).
inline ResidualReport verify_fund_eq2(const Composition& c, const PrecisionContext& ctx, const Real& t_value = 0) {
  detail::Stopwatch clock;
  auto r = detail::start_report(Identity::fund_eq2, c, ctx);
  r.t_values = {t_value};
  if (c.empty()) return detail::skip(r, "composition must be nonempty");
  PrecisionContext::Scope scope(ctx);
  const auto v = eval_pigraded(fund_eq2_identity(c), t_value, ctx);
  r.lhs = v.value;
  r.rhs = Real(0);
  r.residual = boost::multiprecision::abs(v.value);
  detail::finish(r);
  r.wall_seconds = clock.seconds();
  return r;
}

/// (-1)^d zeta^{star,*}(c) - (-1)^{wt} zeta^*(c) against its expansion, at every T in t_values.
inline ResidualReport verify_main2(const Composition& c, const PrecisionContext& ctx,
                                   const std::vector<Real>& t_values = {Real(0), Real(1)}) {
  detail::Stopwatch clock;
  auto r = detail::start_report(Identity::main2, c, ctx);
  r.t_values = t_values;
  if (c.empty()) return detail::skip(r, "composition must be nonempty");
  if (t_values.empty()) return detail::skip(r, "no T values given");
  PrecisionContext::Scope scope(ctx);
  const PiGradedExpr identity = build_main2_identity(c);
  TPoly lhs_poly = regularize(star_expand(c)) * Rational(detail::sign(static_cast<long>(c.depth())));
  lhs_poly = lhs_poly - regularize(c) * Rational(detail::sign(c.weight()));
  for (const Real& t : t_values) {
    const Real diff = eval_pigraded(identity, t, ctx).value;
    const Real residual = boost::multiprecision::abs(diff);
    if (residual >= r.residual) {
      r.residual = residual;
      r.lhs = eval_tpoly(lhs_poly, t, ctx).value;
      r.rhs = r.lhs.re - diff;
    }
  }
  detail::finish(r);
  r.wall_seconds = clock.seconds();
  return r;
}

/// zeta^*(c) against the reduction including the delta sum; opposite parity only.
inline ResidualReport verify_main3(const Composition& c, const PrecisionContext& ctx, const Real& t_value = 0) {
  detail::Stopwatch clock;
  auto r = detail::start_report(Identity::main3, c, ctx);
  r.t_values = {t_value};
  if (c.empty()) return detail::skip(r, "composition must be nonempty");
  if (detail::same_parity(c)) return detail::skip(r, "weight and depth have the same parity");
  PrecisionContext::Scope scope(ctx);
  r.lhs = eval_tpoly(regularize(c), t_value, ctx).value;
  r.rhs = eval_pigraded(reduce_main3(c), t_value, ctx).value;
  r.residual = boost::multiprecision::abs(r.lhs.re - r.rhs.re);
  detail::finish(r);
  r.wall_seconds = clock.seconds();
  return r;
}

/// zeta(c) against reduce_main(c); also requires T-degree 0 and the depth certificate.
inline ResidualReport verify_main(const Composition& c, const PrecisionContext& ctx, const Real& t_value = 0) {
  detail::Stopwatch clock;
  auto r = detail::start_report(Identity::main, c, ctx);
  r.t_values = {t_value};
  if (c.empty()) return detail::skip(r, "composition must be nonempty");
  if (!c.is_admissible()) return detail::skip(r, "composition is not admissible");
  if (detail::same_parity(c)) return detail::skip(r, "weight and depth have the same parity");
  PrecisionContext::Scope scope(ctx);
  const PiGradedExpr reduced = reduce_main(c);
  r.t_degree = reduced.t_degree();
  r.depth_certificate = expand_depth_certificate(reduced, static_cast<int>(c.depth()));
  r.lhs = eval_admissible_mzv(c, ctx).value;
  r.rhs = eval_pigraded(reduced, t_value, ctx).value;
  r.residual = boost::multiprecision::abs(r.lhs.re - r.rhs.re);
  detail::finish(r, *r.t_degree <= 0 && *r.depth_certificate);
  if (!r.pass && r.residual <= r.bound) r.reason = "structural check failed";
  r.wall_seconds = clock.seconds();
  return r;
}

struct BouillotOptions {
  Real t_value = 0;
  /// When set and the first and last parts are >= 2, the regularized value is
  /// also compared with the direct series truncated at this M.
  std::optional<long> direct_terms;
};

/// Regularized multitangent against
///   delta(c) + sum_j sum_{a+s+b=k_j, s>=1} (-1)^{K_{j-1}+a}
///              zeta^*_a(k_{j-1}..k_1) zeta^*_b(k_{j+1}..k_d) Psi_s(z).
inline ResidualReport verify_bouillot(const Composition& c, const ComplexHP& z_in, const PrecisionContext& ctx,
                                      const BouillotOptions& opts = {}) {
  const ComplexHP z = ctx.at_working_precision(z_in);
  detail::Stopwatch clock;
  auto r = detail::start_report(Identity::bouillot, c, ctx);
  r.z = z;
  r.t_values = {opts.t_value};
  PrecisionContext::Scope scope(ctx);
  if (abs(z) == 0 || abs(z) > Real(0.5) + Real(1e-30) || detail::is_integer(z))
    throw precondition_error("verify_bouillot: z must satisfy 0 < |z| <= 1/2");
  if (c.empty()) return detail::skip(r, "composition must be nonempty");

  const auto lhs = eval_multitangent_regularized(c, z, opts.t_value, ctx);
  ComplexHP rhs(eval_pi_term(delta(c), ctx));
  Real rhs_bound = 0;
  const std::size_t d = c.depth();
  int partial = 0;
  for (std::size_t j = 1; j <= d; ++j) {
    const int kj = c[j - 1];
    const Composition head = c.slice(0, j - 1).reversed();
    const Composition tail = c.slice(j, d);
    for (int s = 1; s <= kj; ++s) {
      const auto psi = eval_monotangent(s, z, ctx);
      for (int a = 0; a + s <= kj; ++a) {
        const int b = kj - s - a;
        Real coeff = detail::shifted_value(a, head, opts.t_value, ctx) * detail::shifted_value(b, tail, opts.t_value, ctx);
        if ((partial + a) % 2) coeff = -coeff;
        rhs += psi.value * coeff;
        rhs_bound += boost::multiprecision::abs(coeff) * psi.error_bound;
      }
    }
    partial += kj;
  }
  r.lhs = lhs.value;
  r.rhs = rhs;
  r.residual = abs(lhs.value - rhs);
  r.bound = std::max(r.bound, Real(lhs.error_bound + rhs_bound));

  if (opts.direct_terms && c.front() >= 2 && c.back() >= 2) {
    const auto direct = eval_multitangent_direct(c, z, ctx, *opts.direct_terms);
    r.cross_residual = abs(direct.value - lhs.value);
    r.cross_bound = direct.error_bound + lhs.error_bound;
  }
  detail::finish(r);
  if (!r.pass && r.residual <= r.bound) r.reason = "direct-series cross-check outside its tail bound";
  r.wall_seconds = clock.seconds();
  return r;
}

struct SweepOptions {
  Identity identity = Identity::main;
  std::vector<Real> t_values{Real(0), Real(1)};
  /// Evaluation point; required for bouillot.
  std::optional<ComplexHP> z;
  std::optional<long> direct_terms;
  int max_weight_cap = 14;
};

inline ResidualReport run_identity(const Composition& c, const PrecisionContext& ctx, const SweepOptions& opts) {
  const Real t0 = opts.t_values.empty() ? Real(0) : opts.t_values.front();
  switch (opts.identity) {
    case Identity::main: return verify_main(c, ctx, t0);
    case Identity::main2: return verify_main2(c, ctx, opts.t_values);
    case Identity::main3: return verify_main3(c, ctx, t0);
    case Identity::fund_eq2: return verify_fund_eq2(c, ctx, t0);
    case Identity::bouillot:
      if (!opts.z) throw precondition_error("run_identity: bouillot needs an evaluation point z");
      return verify_bouillot(c, *opts.z, ctx, BouillotOptions{t0, opts.direct_terms});
  }
  throw precondition_error("run_identity: unknown identity");
}

/// Every composition of weight 1..max_weight in (weight, lex) order; cases
/// violating the identity's preconditions appear as skipped entries.
inline std::vector<ResidualReport> sweep(int max_weight, const PrecisionContext& ctx, const SweepOptions& opts,
                                         const std::function<void(const ResidualReport&)>& on_report = {}) {
  if (max_weight > opts.max_weight_cap)
    throw precondition_error("sweep: max_weight exceeds the cap of " + std::to_string(opts.max_weight_cap));
  std::vector<ResidualReport> out;
  for (const Composition& c : compositions_up_to(max_weight)) {
    out.push_back(run_identity(c, ctx, opts));
    if (on_report) on_report(out.back());
  }
  return out;
}

struct SweepSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  Real max_residual = 0;
  bool all_passed() const { return failed == 0; }
};

inline SweepSummary summarize(const std::vector<ResidualReport>& reports) {
  SweepSummary s;
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::passed: ++s.passed; break;
      case Status::failed: ++s.failed; break;
      case Status::skipped: ++s.skipped; break;
    }
    if (r.status != Status::skipped) s.max_residual = std::max(s.max_residual, r.residual);
  }
  return s;
}

}  // namespace mzv
