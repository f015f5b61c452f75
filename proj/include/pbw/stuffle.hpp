#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pbw/lincomb.hpp"
#include "pbw/report.hpp"

namespace pbw {

/// Word over Y = {y1, y2, ...}; letter y_s is stored as s >= 1.
class YWord {
 public:
  YWord() = default;
  YWord(std::initializer_list<unsigned> indices);
  explicit YWord(std::vector<unsigned> indices);

  const std::vector<unsigned>& indices() const { return indices_; }
  std::size_t length() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  // Sum of the indices.
  unsigned weight() const;

  YWord tail() const;
  friend YWord operator*(const YWord& u, const YWord& v);
  friend auto operator<=>(const YWord&, const YWord&) = default;
  friend bool operator==(const YWord&, const YWord&) = default;

  // "y1y3"; "1" for the empty word.
  std::string to_string() const;
  // Accepts "4", "1,3" or "y1y3".
  static YWord parse(const std::string& text);

 private:
  std::vector<unsigned> indices_;
};

using YPoly = LinComb<YWord>;
using YTensor = LinComb<std::pair<YWord, YWord>>;

std::string to_string(const YPoly& p);

YPoly stuffle(const YWord& u, const YWord& v);
YPoly stuffle(const YPoly& p, const YPoly& q);
YPoly conc(const YPoly& p, const YPoly& q);

// Compositions of n in lexicographic order of index sequences.
std::vector<YWord> words_of_weight(unsigned n);

// Algebra morphism for concatenation extending
// y_s -> y_s (x) 1 + 1 (x) y_s + sum_{s1+s2=s} y_s1 (x) y_s2.
YTensor stuffle_coproduct(const YWord& w);
YTensor stuffle_coproduct(const YPoly& p);

// The stuffle product recovered from the coproduct by duality:
// u * v = sum_w <u (x) v, Delta(w)> w over w of weight |u| + |v|.
YPoly stuffle_from_coproduct(const YWord& u, const YWord& v);

// <u * v, w> = <u (x) v, Delta(w)> for all |u| + |v| = |w| <= n.
Report check_stuffle_duality(unsigned n);

// log_*(I) evaluated at w, convolution built from concatenation and the
// stuffle coproduct. Zero on the empty word.
YPoly log_star_identity(const YWord& w);
YPoly log_star_identity(const YPoly& p);

bool check_primitive(const YPoly& p);

// Rank of {log_*(I)(w) : |w| = m} for m = 1..n.
std::vector<std::size_t> primitive_dimensions(unsigned n);

// Duality, stuffle commutativity/associativity, coassociativity and
// cocommutativity, and primitivity of log_*(I) up to weight n.
Report verify_stuffle(unsigned max_weight);

}  // namespace pbw
