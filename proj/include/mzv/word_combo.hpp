#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "mzv/composition.hpp"

namespace mzv {

/// Finite Q-linear combination of compositions. Zero coefficients are never stored.
class WordCombo {
 public:
  using Map = std::map<Composition, Rational>;

  WordCombo() = default;
  explicit WordCombo(Composition c, Rational coeff = 1) { add(std::move(c), coeff); }

  static WordCombo unit() { return WordCombo(Composition{}); }

  void add(const Composition& c, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(c, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const WordCombo& other, const Rational& scale = 1) {
    if (scale == 0) return;
    for (const auto& [c, q] : other.terms_) add(c, q * scale);
  }

  Rational coeff(const Composition& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  std::size_t max_depth() const {
    std::size_t d = 0;
    for (const auto& [c, q] : terms_) d = std::max(d, c.depth());
    return d;
  }

  WordCombo& operator+=(const WordCombo& o) {
    add(o);
    return *this;
  }
  WordCombo& operator-=(const WordCombo& o) {
    add(o, -1);
    return *this;
  }
  WordCombo& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [c, q] : terms_) q *= s;
    }
    return *this;
  }

  friend WordCombo operator+(WordCombo a, const WordCombo& b) { return a += b; }
  friend WordCombo operator-(WordCombo a, const WordCombo& b) { return a -= b; }
  friend WordCombo operator*(WordCombo a, const Rational& s) { return a *= s; }
  friend WordCombo operator*(const Rational& s, WordCombo a) { return a *= s; }
  friend WordCombo operator-(WordCombo a) { return a *= Rational(-1); }
  friend bool operator==(const WordCombo&, const WordCombo&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [c, q] : terms_) {
      std::string coeff = q.str();
      if (!first) {
        if (coeff.front() == '-') {
          s += " - ";
          coeff.erase(0, 1);
        } else {
          s += " + ";
        }
      }
      first = false;
      s += coeff + "*(" + c.to_string() + ")";
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const WordCombo& w) { return os << w.to_string(); }

 private:
  Map terms_;
};

}  // namespace mzv
