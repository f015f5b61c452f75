#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pbw/word.hpp"

namespace pbw {

/// sigma(l) = (left, right): right is the longest proper Lyndon right factor.
struct StandardFactorization {
  Word left;
  Word right;

  friend bool operator==(const StandardFactorization&, const StandardFactorization&) = default;
};

/// Nonincreasing Lyndon factorization, grouped: strictly decreasing factors
/// with their multiplicities.
struct LyndonFactorization {
  std::vector<std::pair<Word, unsigned>> factors;

  Word product() const;
  friend bool operator==(const LyndonFactorization&, const LyndonFactorization&) = default;
};

// Nonempty and strictly smaller than each of its proper right factors.
bool is_lyndon(const Word& w);

// Lyndon words of length <= n over an alphabet of the given size, in
// increasing lexicographic order (Duval's generation).
std::vector<Word> lyndon_up_to(std::size_t alphabet_size, std::size_t n);
inline std::vector<Word> lyndon_up_to(const Alphabet& a, std::size_t n) { return lyndon_up_to(a.size(), n); }

// Throws std::invalid_argument if l is not Lyndon or |l| < 2.
StandardFactorization std_factorization(const Word& l);

LyndonFactorization lyndon_factorization(const Word& w);

}  // namespace pbw
