#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "mzv/word_combo.hpp"

namespace mzv {

namespace detail {

inline WordCombo prepend_all(int a, const WordCombo& w) {
  WordCombo out;
  for (const auto& [c, q] : w) out.add(c.prepended(a), q);
  return out;
}

struct StuffleMemo {
  std::mutex mutex;
  std::map<std::pair<Composition, Composition>, WordCombo> table;
};

inline StuffleMemo& stuffle_memo() {
  static StuffleMemo memo;
  return memo;
}

}  // namespace detail

/// Quasi-shuffle product of two compositions:
///   (a.u) * (b.v) = a.(u * b.v) + b.(a.u * v) + (a+b).(u * v),   () * v = v.
inline WordCombo stuffle(const Composition& u, const Composition& v) {
  if (u.empty()) return WordCombo(v);
  if (v.empty()) return WordCombo(u);

  // the product is commutative; cache one orientation
  auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
  auto& memo = detail::stuffle_memo();
  {
    std::lock_guard lock(memo.mutex);
    if (auto it = memo.table.find(key); it != memo.table.end()) return it->second;
  }

  const int a = u.front();
  const int b = v.front();
  const Composition ut = u.without_front();
  const Composition vt = v.without_front();

  WordCombo out = detail::prepend_all(a, stuffle(ut, v));
  out += detail::prepend_all(b, stuffle(u, vt));
  out += detail::prepend_all(a + b, stuffle(ut, vt));

  std::lock_guard lock(memo.mutex);
  memo.table.emplace(std::move(key), out);
  return out;
}

inline WordCombo stuffle(const WordCombo& x, const WordCombo& y) {
  WordCombo out;
  for (const auto& [u, p] : x)
    for (const auto& [v, q] : y) out.add(stuffle(u, v), p * q);
  return out;
}

/// Sum over the 2^(d-1) ways of replacing each separator by "," or "+".
/// star_expand(()) = 1*().
inline WordCombo star_expand(const Composition& c) {
  if (c.depth() <= 1) return WordCombo(c);
  const std::size_t gaps = c.depth() - 1;
  WordCombo out;
  for (unsigned long mask = 0; mask < (1UL << gaps); ++mask) {
    std::vector<int> parts{c[0]};
    for (std::size_t g = 0; g < gaps; ++g) {
      if (mask & (1UL << g))
        parts.back() += c[g + 1];
      else
        parts.push_back(c[g + 1]);
    }
    out.add(Composition(std::move(parts)), 1);
  }
  return out;
}

/// Coefficient of z^a in the shifted nested sum with denominators (n_j + z)^{k_j}:
///   (-1)^a sum_{a_1+...+a_d=a} prod_j C(k_j-1+a_j, a_j) (k_1+a_1, ..., k_d+a_d).
inline WordCombo shift_expand(int a, const Composition& c) {
  if (a < 0) throw precondition_error("shift_expand: shift must be >= 0");
  if (c.empty()) return a == 0 ? WordCombo::unit() : WordCombo{};
  WordCombo out;
  const Rational sign = (a % 2 == 0) ? 1 : -1;
  std::vector<int> parts(c.begin(), c.end());
  auto rec = [&](auto&& self, std::size_t j, int remaining, const Integer& weight) -> void {
    if (j + 1 == parts.size()) {
      parts[j] = c[j] + remaining;
      out.add(Composition(parts), sign * Rational(weight * binomial(c[j] - 1 + remaining, remaining)));
      return;
    }
    for (int aj = 0; aj <= remaining; ++aj) {
      parts[j] = c[j] + aj;
      self(self, j + 1, remaining - aj, weight * binomial(c[j] - 1 + aj, aj));
    }
  };
  rec(rec, 0, a, Integer(1));
  return out;
}

}  // namespace mzv
