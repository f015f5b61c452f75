#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pbw/core_algebra.hpp"
#include "pbw/report.hpp"

namespace pbw {

/// Symmetric, antireflexive commutation relation on letters.
class Independence {
 public:
  Independence() = default;
  // Throws std::invalid_argument on a pair (x, x).
  explicit Independence(const std::vector<std::pair<Letter, Letter>>& pairs);
  // Every pair of distinct letters.
  static Independence full(std::size_t alphabet_size);
  // "a,c" or "ac,bd" or "a,c,b,d".
  static Independence parse(const Alphabet& alphabet, const std::string& text);

  bool commute(Letter x, Letter y) const;
  const std::set<std::pair<Letter, Letter>>& pairs() const { return pairs_; }
  std::string to_string(const Alphabet& alphabet) const;

 private:
  std::set<std::pair<Letter, Letter>> pairs_;  // stored with first < second
};

/// Element of M(X, theta), identified by its lexicographically minimal
/// representative.
struct Trace {
  Word canonical;

  std::size_t size() const { return canonical.size(); }
  friend auto operator<=>(const Trace&, const Trace&) = default;
  friend bool operator==(const Trace&, const Trace&) = default;
};

using TracePoly = LinComb<Trace>;

// Characterization of pc-Lyndon traces.
//  right_factor: a unique initial letter and strictly smaller than every
//                proper right factor.
//  conjugacy:    primitive and minimal in its conjugacy class, optionally
//                connected. Agrees with right_factor for some theta only.
enum class LyndonRule { right_factor, conjugacy };

LyndonRule parse_lyndon_rule(const std::string& s);
std::string to_string(LyndonRule rule);

// Representative identifying a trace; traces are ordered lexicographically
// by it.
enum class NormalForm { lex_min, lex_max };

NormalForm parse_normal_form(const std::string& s);
std::string to_string(NormalForm nf);

// How S_l is obtained for a pc-Lyndon trace l = x u.
//  recursion: S_l = x S_u, as in the free case.
//  inversion: the dual-basis element, solved exactly from the P family on
//             the multidegree class of l.
// Non-Lyndon S_w are normalized shuffle powers either way.
enum class LyndonDual { recursion, inversion };

LyndonDual parse_lyndon_dual(const std::string& s);
std::string to_string(LyndonDual d);

struct TraceOptions {
  std::size_t max_length = 6;
  std::size_t max_alphabet = 4;
  NormalForm normal_form = NormalForm::lex_min;
  LyndonRule rule = LyndonRule::right_factor;
  LyndonDual dual = LyndonDual::recursion;
  // Conjugacy rule only: require a connected dependence graph on the support.
  bool connectedness = true;
};

/// Free partially commutative monoid with the brute-force machinery for its
/// Lyndon traces, PBW family, dual family and factorization. Memo tables are
/// guarded; instances may be shared between threads.
class TraceMonoid {
 public:
  TraceMonoid(Alphabet alphabet, Independence theta, TraceOptions options = {});

  const Alphabet& alphabet() const { return alphabet_; }
  const Independence& theta() const { return theta_; }
  const TraceOptions& options() const { return options_; }

  // Lexicographically least word in the commutation class of w.
  Trace normal_form(const Word& w) const;
  bool trace_equal(const Word& u, const Word& v) const;
  Trace concat(const Trace& u, const Trace& v) const;
  Trace parse(const std::string& text) const { return normal_form(alphabet_.parse(text)); }
  std::string format(const Trace& t) const;

  // All words equivalent to t (closure under adjacent commutations).
  std::vector<Word> representatives(const Trace& t) const;
  // All (u, v) with u v = t.
  std::vector<std::pair<Trace, Trace>> factorizations(const Trace& t) const;
  std::vector<Trace> conjugacy_class(const Trace& t) const;
  bool is_primitive(const Trace& t) const;
  bool is_connected(const Trace& t) const;
  // Letters x with t = x s.
  std::set<Letter> initial_letters(const Trace& t) const;
  bool is_pc_lyndon(const Trace& t) const;

  // All traces of length <= n in increasing order of canonical form.
  std::vector<Trace> traces_up_to(std::size_t n) const;
  std::vector<Trace> pc_lyndon_up_to(std::size_t n) const;

  // (f, n) with f != 1, n pc-Lyndon and minimal among such right factors.
  // Throws std::invalid_argument for |w| < 2.
  std::pair<Trace, Trace> pc_std_factorization(const Trace& w) const;

  // Every factorization t = l1 ... lk into pc-Lyndon traces with
  // l1 >= ... >= lk. Exactly one is expected.
  std::vector<std::vector<Trace>> nonincreasing_factorizations(const Trace& t) const;

  // Dual of the trace coproduct: <u sh v, w> = <u (x) v, Delta(w)>.
  WordComb pc_shuffle(const Word& u, const Word& v) const;
  TensorPoly coproduct(const Trace& t) const;

  const WordComb& pc_pbw_P(const Trace& t) const;
  const WordComb& pc_dual_S(const Trace& t) const;
  TracePoly to_trace_poly(const WordComb& p) const;

  // P_t = t + strictly greater traces.
  bool check_triangular(const Trace& t) const;
  Report check_duality(std::size_t n) const;

  TensorPoly diagonal_series(std::size_t n) const;
  TensorPoly schuetzenberger_product(std::size_t n, bool decreasing = true) const;
  Report verify_sf_trace(std::size_t n, bool decreasing = true) const;

 private:
  Alphabet alphabet_;
  Independence theta_;
  TraceOptions options_;

  mutable std::mutex mutex_;
  mutable std::map<Trace, WordComb> p_memo_;
  mutable std::map<Trace, WordComb> s_memo_;
  mutable std::map<std::pair<Word, Word>, WordComb> shuffle_memo_;
  mutable std::map<Trace, bool> lyndon_memo_;

  void enforce_cap(std::size_t length) const;
  WordComb trace_conc(const WordComb& a, const WordComb& b) const;
  WordComb compute_P(const Trace& t) const;
  WordComb compute_S(const Trace& t) const;
  WordComb dual_by_inversion(const Trace& t) const;
  WordComb compute_shuffle(const Word& u, const Word& v) const;
  void collect_factorizations(const Trace& t, const std::optional<Trace>& bound, std::vector<Trace>& prefix,
                              std::vector<std::vector<Trace>>& out) const;
};

}  // namespace pbw
