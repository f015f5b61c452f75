#include "pbw/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "pbw/errors.hpp"

namespace pbw {

Word Word::sub(std::size_t pos, std::size_t len) const {
  if (pos > letters_.size()) throw std::out_of_range("Word::sub");
  len = std::min(len, letters_.size() - pos);
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

Word Word::reversed() const { return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend())); }

Word operator*(const Word& u, const Word& v) {
  std::vector<Letter> out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.letters_.begin(), u.letters_.end());
  out.insert(out.end(), v.letters_.begin(), v.letters_.end());
  return Word(std::move(out));
}

Word power(const Word& w, unsigned k) {
  Word out;
  for (unsigned i = 0; i < k; ++i) out = out * w;
  return out;
}

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
  if (letters_.size() > 255) throw std::invalid_argument("alphabet too large");
  std::string sorted = letters_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("alphabet has duplicate symbols: " + letters_);
}

Letter Alphabet::index_of(char c) const {
  auto pos = letters_.find(c);
  if (pos == std::string::npos) throw std::invalid_argument(std::string("symbol not in alphabet: ") + c);
  return static_cast<Letter>(pos);
}

bool Alphabet::contains(const Word& w) const {
  return std::all_of(w.begin(), w.end(), [&](Letter x) { return x < letters_.size(); });
}

Word Alphabet::parse(std::string_view text) const {
  std::vector<Letter> out;
  out.reserve(text.size());
  for (char c : text) out.push_back(index_of(c));
  return Word(std::move(out));
}

std::string Alphabet::format(const Word& w) const {
  std::string s;
  s.reserve(w.size());
  for (Letter x : w) s.push_back(symbol(x));
  return s;
}

std::vector<Word> Alphabet::words_of_length(std::size_t n) const {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    next.reserve(out.size() * size());
    for (const auto& w : out)
      for (std::size_t x = 0; x < size(); ++x) next.push_back(w * Word{static_cast<Letter>(x)});
    out = std::move(next);
  }
  return out;
}

std::vector<Word> Alphabet::words_up_to(std::size_t n) const {
  std::vector<Word> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto layer = words_of_length(k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::strong_ordering word_cmp(const Word& u, const Word& v) { return u <=> v; }

std::strong_ordering word_cmp(const Alphabet& au, const Word& u, const Alphabet& av, const Word& v) {
  if (!(au == av)) throw AlphabetMismatch("word_cmp: words over different alphabets");
  if (!au.contains(u) || !av.contains(v)) throw AlphabetMismatch("word_cmp: letter outside alphabet");
  return u <=> v;
}

}  // namespace pbw
