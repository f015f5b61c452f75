#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "pbw/rational.hpp"

namespace pbw {

/// Finitely supported map Key -> Rational with zero coefficients eagerly
/// removed, so that map equality coincides with equality of the vectors.
template <class Key>
class LinComb {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Rational>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  explicit LinComb(const Key& k, const Rational& c = Rational(1)) { add(k, c); }

  void add(const Key& k, const Rational& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const Rational& s) {
    if (is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  // Adds s * o without materializing the scaled copy.
  void add_scaled(const LinComb& o, const Rational& s) {
    if (is_zero(s)) return;
    for (const auto& [k, c] : o.terms_) add(k, c * s);
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
  friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

 private:
  map_type terms_;
};

/// Coefficient-wise pairing: sum of products over the joint support.
template <class Key>
Rational scalar_product(const LinComb<Key>& a, const LinComb<Key>& b) {
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  Rational s = 0;
  for (const auto& [k, c] : small) {
    auto it = large.terms().find(k);
    if (it != large.terms().end()) s += c * it->second;
  }
  return s;
}

}  // namespace pbw
