#pragma once

#include <cstddef>
#include <map>
#include <mutex>

#include "pbw/core_algebra.hpp"
#include "pbw/report.hpp"

namespace pbw {

struct PbwElement {
  Word word;
  Poly poly;
};

struct DualElement {
  Word word;
  Poly poly;
};

/// The PBW family P_w of the free algebra and its dual family S_w, memoized
/// per alphabet. Safe to share between threads.
class PbwFamily {
 public:
  explicit PbwFamily(AlphabetRef alphabet);

  const AlphabetRef& alphabet() const { return alphabet_; }

  // P_1 = 1, P_x = x, P_l = [P_l1, P_l2] for Lyndon l, and decreasing
  // products of the Lyndon factors otherwise.
  PbwElement pbw_P(const Word& w) const;
  // S_1 = 1, S_x = x, S_{xu} = x S_u for Lyndon xu, and normalized shuffle
  // powers along the decreasing factorization otherwise.
  DualElement dual_S(const Word& w) const;

  const WordComb& P(const Word& w) const;
  const WordComb& S(const Word& w) const;

  // P_w = w + sum of strictly greater words.
  bool check_triangular(const Word& w) const;

  // Pairs <S_u, P_v> over all words of length <= n. Reports every deviation
  // from the Kronecker delta. With `parallel`, rows are split across threads;
  // the violation order is the same either way.
  Report check_duality(std::size_t n, bool parallel = false) const;
  // check_triangular over all words of length <= n.
  Report check_triangularity(std::size_t n) const;

 private:
  AlphabetRef alphabet_;
  mutable std::mutex mutex_;
  mutable std::map<Word, WordComb> p_memo_;
  mutable std::map<Word, WordComb> s_memo_;

  WordComb compute_P(const Word& w) const;
  WordComb compute_S(const Word& w) const;
};

// Direct expansion of the bracketing without memoization (determinism check).
WordComb pbw_P_unmemoized(const Word& w);

// Letter multidegree of a word.
std::vector<std::size_t> multidegree(const Word& w, std::size_t alphabet_size);

}  // namespace pbw
