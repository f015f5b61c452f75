#include "pbw/core_algebra.hpp"

#include <map>

#include "pbw/errors.hpp"

namespace pbw {

namespace {

void shuffle_into(const Word& u, std::size_t i, const Word& v, std::size_t j, Word& prefix, const Rational& c,
                  WordComb& out) {
  if (i == u.size() && j == v.size()) {
    out.add(prefix, c);
    return;
  }
  if (i < u.size()) {
    prefix.push_back(u[i]);
    shuffle_into(u, i + 1, v, j, prefix, c, out);
    prefix.pop_back();
  }
  if (j < v.size()) {
    prefix.push_back(v[j]);
    shuffle_into(u, i, v, j + 1, prefix, c, out);
    prefix.pop_back();
  }
}

}  // namespace

WordComb shuffle_words(const Word& u, const Word& v) {
  WordComb out;
  Word prefix;
  shuffle_into(u, 0, v, 0, prefix, Rational(1), out);
  return out;
}

WordComb shuffle(const WordComb& p, const WordComb& q) {
  WordComb out;
  for (const auto& [u, cu] : p)
    for (const auto& [v, cv] : q) out.add_scaled(shuffle_words(u, v), cu * cv);
  return out;
}

WordComb concatenate(const WordComb& p, const WordComb& q) {
  WordComb out;
  for (const auto& [u, cu] : p)
    for (const auto& [v, cv] : q) out.add(u * v, cu * cv);
  return out;
}

TensorPoly coproduct(const WordComb& p) {
  TensorPoly out;
  for (const auto& [w, c] : p) {
    // Multiply out the letter rule x -> x(x)1 + 1(x)x letter by letter.
    TensorPoly acc(WordPair{Word{}, Word{}});
    for (Letter x : w) {
      TensorPoly next;
      for (const auto& [k, a] : acc) {
        next.add(WordPair{k.first * Word{x}, k.second}, a);
        next.add(WordPair{k.first, k.second * Word{x}}, a);
      }
      acc = std::move(next);
    }
    out.add_scaled(acc, c);
  }
  return out;
}

WordComb antipode(const WordComb& p) {
  WordComb out;
  for (const auto& [w, c] : p) out.add(w.reversed(), w.size() % 2 == 0 ? c : Rational(-c));
  return out;
}

Rational counit(const WordComb& p) { return p.coeff(Word{}); }

Poly::Poly(AlphabetRef alphabet, WordComb terms) : alphabet_(std::move(alphabet)), terms_(std::move(terms)) {
  if (alphabet_)
    for (const auto& [w, c] : terms_)
      if (!alphabet_->contains(w)) throw AlphabetMismatch("Poly: word uses a letter outside the alphabet");
}

Poly Poly::word(AlphabetRef alphabet, const Word& w, const Rational& c) {
  return Poly(std::move(alphabet), WordComb(w, c));
}

Poly Poly::parse_word(AlphabetRef alphabet, std::string_view text, const Rational& c) {
  Word w = alphabet->parse(text);
  return Poly(std::move(alphabet), WordComb(w, c));
}

Poly& Poly::operator+=(const Poly& o) {
  alphabet_ = common_alphabet(*this, o);
  terms_ += o.terms_;
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  alphabet_ = common_alphabet(*this, o);
  terms_ -= o.terms_;
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  terms_ *= s;
  return *this;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string word = w.empty() ? "" : (alphabet_ ? alphabet_->format(w) : std::string("?"));
    if (w.empty())
      s += pbw::to_string(mag);
    else if (mag == 1)
      s += word;
    else
      s += pbw::to_string(mag) + word;
  }
  return s;
}

AlphabetRef common_alphabet(const Poly& p, const Poly& q) {
  if (!p.alphabet()) return q.alphabet();
  if (!q.alphabet()) return p.alphabet();
  if (p.alphabet() != q.alphabet() && !(*p.alphabet() == *q.alphabet()))
    throw AlphabetMismatch("polynomials over different alphabets");
  return p.alphabet();
}

Poly conc_mul(const Poly& p, const Poly& q) {
  auto a = common_alphabet(p, q);
  return Poly(a, concatenate(p.terms(), q.terms()));
}

Poly shuffle(const Poly& p, const Poly& q) {
  auto a = common_alphabet(p, q);
  return Poly(a, shuffle(p.terms(), q.terms()));
}

TensorPoly coproduct(const Poly& p) { return coproduct(p.terms()); }

Poly antipode(const Poly& p) { return Poly(p.alphabet(), antipode(p.terms())); }

Rational pairing(const Poly& p, const Poly& q) {
  common_alphabet(p, q);
  return scalar_product(p.terms(), q.terms());
}

TensorPoly tensor_mul(const TensorPoly& s, const TensorPoly& t, LeftLaw left, std::size_t max_degree) {
  auto right_law = [](const Word& u, const Word& v) { return WordComb(u * v); };
  if (left == LeftLaw::shuffle)
    return tensor_mul_with(s, t, [](const Word& u, const Word& v) { return shuffle_words(u, v); }, right_law,
                           max_degree);
  return tensor_mul_with(s, t, right_law, right_law, max_degree);
}

std::string format_tensor_key(const Alphabet& alphabet, const WordPair& key) {
  auto f = [&](const Word& w) { return w.empty() ? std::string("1") : alphabet.format(w); };
  return f(key.first) + "⊗" + f(key.second);
}

}  // namespace pbw
