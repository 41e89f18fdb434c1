#pragma once

#include <mutex>
#include <string>
#include <vector>

#include "mzv/composition.hpp"

namespace mzv {

/// Bernoulli number B_n (B_1 = -1/2), from
///   sum_{k=0}^{n} C(n+1, k) B_k = 0.
inline Rational bernoulli(int n) {
  if (n < 0) throw precondition_error("bernoulli: n must be >= 0");
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  while (static_cast<int>(table.size()) <= n) {
    const int m = static_cast<int>(table.size());
    Rational s = 0;
    for (int k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * table[k];
    table.push_back(-s / (m + 1));
  }
  return table[n];
}

/// coeff * pi^pi_exp with pi_exp even.
struct PiTerm {
  Rational coeff = 0;
  int pi_exp = 0;

  PiTerm() = default;
  PiTerm(Rational c, int e) : coeff(std::move(c)), pi_exp(e) {
    if (e < 0 || e % 2 != 0) throw precondition_error("PiTerm: pi exponent must be even and >= 0");
    if (coeff == 0) pi_exp = 0;
  }

  bool is_zero() const { return coeff == 0; }

  friend PiTerm operator*(const PiTerm& a, const PiTerm& b) {
    return PiTerm(a.coeff * b.coeff, a.pi_exp + b.pi_exp);
  }
  /// Sum of like powers; the zero term is neutral.
  friend PiTerm operator+(const PiTerm& a, const PiTerm& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.pi_exp != b.pi_exp) throw precondition_error("PiTerm: cannot add unlike powers of pi");
    return PiTerm(a.coeff + b.coeff, a.pi_exp);
  }
  friend bool operator==(const PiTerm&, const PiTerm&) = default;

  std::string to_string() const {
    if (pi_exp == 0) return coeff.str();
    return coeff.str() + "*pi^" + std::to_string(pi_exp);
  }
};

/// zeta(2m) = (-1)^{m+1} (2 pi)^{2m} B_{2m} / (2 (2m)!).
inline PiTerm even_zeta(int m) {
  if (m < 1) throw precondition_error("even_zeta: m must be >= 1");
  Rational c = Rational(Integer(1) << (2 * m)) * bernoulli(2 * m) / (2 * Rational(factorial(2 * m)));
  if (m % 2 == 0) c = -c;
  return PiTerm(c, 2 * m);
}

/// (-1)^n pi^{2n} / (2n)! when c consists of 2n ones (n >= 0), zero otherwise.
inline PiTerm delta(const Composition& c) {
  if (!c.all_ones() || c.depth() % 2 != 0) return PiTerm{};
  const int n = static_cast<int>(c.depth() / 2);
  Rational v = 1 / Rational(factorial(2 * n));
  if (n % 2 == 1) v = -v;
  return PiTerm(v, 2 * n);
}

}  // namespace mzv
