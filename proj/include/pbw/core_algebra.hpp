#pragma once

#include <cstddef>
#include <string>

#include "pbw/lincomb.hpp"
#include "pbw/word.hpp"

namespace pbw {

// Untyped sparse polynomials over words and pairs of words. The alphabet is
// implicit; Poly below adds it back for the public API.
using WordComb = LinComb<Word>;
using TensorPoly = LinComb<WordPair>;

// Word-level kernels.
WordComb shuffle_words(const Word& u, const Word& v);
WordComb shuffle(const WordComb& p, const WordComb& q);
WordComb concatenate(const WordComb& p, const WordComb& q);
TensorPoly coproduct(const WordComb& p);
WordComb antipode(const WordComb& p);
Rational counit(const WordComb& p);

// Polynomial in k<X> tied to an alphabet. A null alphabet marks an
// alphabet-agnostic constant (e.g. the unit) that combines with anything.
class Poly {
 public:
  Poly() = default;
  explicit Poly(AlphabetRef alphabet, WordComb terms = {});
  static Poly word(AlphabetRef alphabet, const Word& w, const Rational& c = Rational(1));
  static Poly parse_word(AlphabetRef alphabet, std::string_view text, const Rational& c = Rational(1));
  static Poly one() { return Poly(nullptr, WordComb(Word{})); }

  const AlphabetRef& alphabet() const { return alphabet_; }
  const WordComb& terms() const { return terms_; }
  Rational coeff(const Word& w) const { return terms_.coeff(w); }
  bool is_zero() const { return terms_.empty(); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  // Equality is equality of the coefficient maps.
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  // e.g. "2ab - 1/2ba"; "0" for zero, "1" for the empty word.
  std::string to_string() const;

 private:
  AlphabetRef alphabet_;
  WordComb terms_;
};

// Alphabet shared by p and q; throws AlphabetMismatch when both are set and differ.
AlphabetRef common_alphabet(const Poly& p, const Poly& q);

Poly conc_mul(const Poly& p, const Poly& q);
Poly shuffle(const Poly& p, const Poly& q);
TensorPoly coproduct(const Poly& p);
Poly antipode(const Poly& p);
Rational pairing(const Poly& p, const Poly& q);

enum class LeftLaw { shuffle, conc };

// Componentwise product of two tensors: `left` on the left leg, concatenation
// on the right leg. Output terms whose right leg is longer than max_degree are
// dropped.
TensorPoly tensor_mul(const TensorPoly& s, const TensorPoly& t, LeftLaw left, std::size_t max_degree);

// Same, with caller-supplied laws (used for traces). Both laws must map a pair
// of words to a combination of words whose length is the sum of the inputs.
template <class LeftFn, class RightFn>
TensorPoly tensor_mul_with(const TensorPoly& s, const TensorPoly& t, LeftFn&& left, RightFn&& right,
                           std::size_t max_degree) {
  TensorPoly out;
  for (const auto& [ks, cs] : s) {
    for (const auto& [kt, ct] : t) {
      if (ks.second.size() + kt.second.size() > max_degree) continue;
      const WordComb l = left(ks.first, kt.first);
      const WordComb r = right(ks.second, kt.second);
      const Rational c = cs * ct;
      for (const auto& [lw, lc] : l)
        for (const auto& [rw, rc] : r) out.add(WordPair{lw, rw}, c * lc * rc);
    }
  }
  return out;
}

std::string format_tensor_key(const Alphabet& alphabet, const WordPair& key);

}  // namespace pbw
