#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "mzv/composition.hpp"

namespace mzv {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

inline Real to_real(const Rational& q) {
  Real n(numerator(q).str());
  Real d(denominator(q).str());
  return n / d;
}

/// Complex number with arbitrary-precision parts.
struct ComplexHP {
  Real re = 0;
  Real im = 0;

  ComplexHP() = default;
  ComplexHP(Real r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  ComplexHP(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  static ComplexHP from(double r, double i = 0) { return {Real(r), Real(i)}; }
  /// Decimal parse at the current default precision; prefer
  /// PrecisionContext::parse_complex, which parses at working precision.
  static ComplexHP parse(const std::string& r, const std::string& i) { return {Real(r), Real(i)}; }

  bool is_real() const { return im == 0; }

  ComplexHP& operator+=(const ComplexHP& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexHP& operator-=(const ComplexHP& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ComplexHP& operator*=(const ComplexHP& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  ComplexHP& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
  ComplexHP& operator/=(const ComplexHP& o) {
    const Real den = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / den;
    im = (im * o.re - re * o.im) / den;
    re = std::move(r);
    return *this;
  }

  friend ComplexHP operator+(ComplexHP a, const ComplexHP& b) { return a += b; }
  friend ComplexHP operator-(ComplexHP a, const ComplexHP& b) { return a -= b; }
  friend ComplexHP operator*(ComplexHP a, const ComplexHP& b) { return a *= b; }
  friend ComplexHP operator*(ComplexHP a, const Real& s) { return a *= s; }
  friend ComplexHP operator*(const Real& s, ComplexHP a) { return a *= s; }
  friend ComplexHP operator/(ComplexHP a, const ComplexHP& b) { return a /= b; }
  friend ComplexHP operator-(ComplexHP a) {
    a.re = -a.re;
    a.im = -a.im;
    return a;
  }
};

inline Real abs(const ComplexHP& z) { return boost::multiprecision::sqrt(z.re * z.re + z.im * z.im); }

inline ComplexHP inverse(const ComplexHP& z) { return ComplexHP(Real(1)) / z; }

inline ComplexHP pow(ComplexHP base, int n) {
  if (n < 0) return inverse(pow(std::move(base), -n));
  ComplexHP r(Real(1));
  while (n) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return r;
}

inline ComplexHP exp(const ComplexHP& z) {
  const Real m = boost::multiprecision::exp(z.re);
  return {m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im)};
}

/// A value together with an estimated bound on its absolute error.
template <class T>
struct Estimate {
  T value;
  Real error_bound;
};

namespace detail {

/// Per-context memo tables; filled lazily, guarded by one mutex.
struct EvalCache {
  std::mutex mutex;
  std::map<std::string, Real> polylog_half;
  std::map<Composition, Estimate<Real>> mzv;
  std::map<int, Real> zeta_single;
  std::map<std::pair<std::string, int>, std::vector<Real>> lerch_series;
  std::map<std::pair<Composition, int>, std::vector<Real>> hurwitz_series;
};

}  // namespace detail

/// Working precision for every numeric evaluator. Values produced under a
/// context target an absolute error below 10^-digits; intermediate work runs
/// at digits + guard_digits.
class PrecisionContext {
 public:
  struct Options {
    int guard_digits = 10;
    /// Overrides the automatic Taylor cutoff when set.
    std::optional<int> taylor_terms;
    /// Default truncation for the direct multitangent series.
    long direct_terms = 100000;
  };

  explicit PrecisionContext(int digits) : PrecisionContext(digits, Options{}) {}
  PrecisionContext(int digits, Options opts)
      : digits_(digits), opts_(opts), cache_(std::make_shared<detail::EvalCache>()) {
    if (digits < 10) throw precondition_error("PrecisionContext: digits must be >= 10");
    if (opts.guard_digits < 10) throw precondition_error("PrecisionContext: guard_digits must be >= 10");
    Scope scope(*this);
    pi_ = Real(0);
    mpfr_const_pi(pi_.backend().data(), MPFR_RNDN);
  }

  int digits() const { return digits_; }
  int guard_digits() const { return opts_.guard_digits; }
  int working_digits() const { return digits_ + opts_.guard_digits; }
  const Real& pi() const { return pi_; }
  long direct_terms() const { return opts_.direct_terms; }
  const Options& options() const { return opts_; }

  /// 10^-digits
  Real tolerance() const {
    Scope scope(*this);
    return boost::multiprecision::pow(Real(10), -digits_);
  }

  /// Taylor cutoff for |z| <= radius: ceil((digits + 10) / log10(1/|z|)).
  int taylor_terms(double radius) const {
    if (opts_.taylor_terms) return *opts_.taylor_terms;
    if (radius <= 0) return 0;
    return static_cast<int>(std::ceil((digits_ + 10) / std::log10(1.0 / radius)));
  }

  detail::EvalCache& cache() const { return *cache_; }

  /// Decimal parse at working precision ("0.3" is not rounded through a double).
  Real parse_real(const std::string& s) const {
    Scope scope(*this);
    return Real(s);
  }
  ComplexHP parse_complex(const std::string& re, const std::string& im) const {
    Scope scope(*this);
    return {Real(re), Real(im)};
  }
  /// Copies z at working precision. MPFR results keep the precision of their
  /// operands, so a low-precision input would otherwise degrade every result.
  ComplexHP at_working_precision(const ComplexHP& z) const {
    const auto p = static_cast<unsigned>(working_digits());
    return {Real(z.re, p), Real(z.im, p)};
  }
  Real at_working_precision(const Real& x) const { return Real(x, static_cast<unsigned>(working_digits())); }

  /// Sets the default MPFR precision to the working precision for the
  /// lifetime of the scope.
  class Scope {
   public:
    explicit Scope(const PrecisionContext& ctx) : saved_(Real::default_precision()) {
      Real::default_precision(ctx.working_digits());
    }
    ~Scope() { Real::default_precision(saved_); }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    unsigned saved_;
  };

 private:
  int digits_;
  Options opts_;
  Real pi_;
  std::shared_ptr<detail::EvalCache> cache_;
};

/// Fixed-point rendering with `digits` digits after the point.
inline std::string format_real(const Real& x, int digits) {
  return x.str(digits, std::ios_base::fixed);
}

inline std::string format_sci(const Real& x, int digits = 3) { return x.str(digits, std::ios_base::scientific); }

}  // namespace mzv
