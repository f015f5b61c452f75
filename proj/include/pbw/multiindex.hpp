#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pbw/rational.hpp"

namespace pbw {

/// Finitely supported map index -> positive natural (an element of N^(I)).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::map<std::size_t, unsigned> entries);
  // e_i
  static MultiIndex unit(std::size_t i, unsigned k = 1);

  unsigned operator[](std::size_t i) const;
  const std::map<std::size_t, unsigned>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  // |alpha| = sum of the values.
  unsigned degree() const;
  // alpha! = product of factorials of the values.
  Rational factorial() const;
  // Largest index in the support, or nothing for the zero multiindex.
  std::size_t max_index() const { return entries_.empty() ? 0 : entries_.rbegin()->first; }

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  // a - b; throws std::domain_error unless b <= a componentwise.
  friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);
  bool divides(const MultiIndex& other) const;

  // Generator sequence of B^alpha in the multiindex convention: the largest
  // index leftmost, each index repeated alpha(i) times.
  std::vector<std::size_t> materialize() const;
  static MultiIndex from_sequence(const std::vector<std::size_t>& seq);

  // "0" for zero, else e.g. "e^2h" with names, or "2e0+e2" without.
  std::string to_string(const std::vector<std::string>& names = {}) const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::map<std::size_t, unsigned> entries_;
};

// (a+b)! / (a! b!)
Rational multinomial_ratio(const MultiIndex& a, const MultiIndex& b);

// All multiindices over {0..dim-1} with degree <= max_degree, by degree then
// lexicographically on the exponent vector.
std::vector<MultiIndex> multiindices_up_to(std::size_t dim, unsigned max_degree);

// All beta with beta <= alpha componentwise.
std::vector<MultiIndex> sub_multiindices(const MultiIndex& alpha);

}  // namespace pbw
