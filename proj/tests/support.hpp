#pragma once

#include <random>

#include "pbw/core_algebra.hpp"
#include "pbw/word.hpp"

namespace pbw::test {

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611);
  return gen;
}

inline Word random_word(std::size_t alphabet_size, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(alphabet_size) - 1);
  Word w;
  for (std::size_t n = len(rng()); n > 0; --n) w.push_back(static_cast<Letter>(letter(rng())));
  return w;
}

inline Word subword(const Word& w, unsigned mask, bool keep) {
  Word r;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (((mask >> i) & 1u) == keep) r.push_back(w[i]);
  return r;
}

// Sum over the placements of u's letters among |u| + |v| positions.
inline WordComb brute_shuffle(const Word& u, const Word& v) {
  WordComb out;
  std::size_t n = u.size() + v.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != u.size()) continue;
    Word w;
    std::size_t i = 0, j = 0;
    for (std::size_t p = 0; p < n; ++p) w.push_back((mask >> p) & 1u ? u[i++] : v[j++]);
    out.add(w, Rational(1));
  }
  return out;
}

// Sum over subsets of positions of w|S (x) w|complement.
inline TensorPoly brute_coproduct(const Word& w) {
  TensorPoly out;
  for (unsigned mask = 0; mask < (1u << w.size()); ++mask)
    out.add({subword(w, mask, true), subword(w, mask, false)}, Rational(1));
  return out;
}

}  // namespace pbw::test
