#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pbw {

using Letter = std::uint8_t;

/// Finite sequence of letter indices. Ordering is lexicographic with a proper
/// prefix smaller than its extensions; the empty word is the monoid unit.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const std::vector<Letter>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  // Factor [pos, pos + len).
  Word sub(std::size_t pos, std::size_t len = std::string::npos) const;
  Word reversed() const;
  void push_back(Letter x) { letters_.push_back(x); }
  void pop_back() { letters_.pop_back(); }

  friend Word operator*(const Word& u, const Word& v);
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word power(const Word& w, unsigned k);

using WordPair = std::pair<Word, Word>;

/// Totally ordered finite alphabet of single-character symbols; the order is
/// the position in the string.
class Alphabet {
 public:
  explicit Alphabet(std::string letters);

  std::size_t size() const { return letters_.size(); }
  const std::string& letters() const { return letters_; }
  char symbol(Letter x) const { return letters_.at(x); }
  Letter index_of(char c) const;
  bool contains(const Word& w) const;

  // "ab" -> Word{0, 1}. Throws std::invalid_argument for unknown symbols.
  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;

  // All words of length exactly n, in lexicographic order.
  std::vector<Word> words_of_length(std::size_t n) const;
  // All words of length <= n, ordered by length then lexicographically.
  std::vector<Word> words_up_to(std::size_t n) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string letters_;
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

inline AlphabetRef make_alphabet(std::string letters) {
  return std::make_shared<const Alphabet>(std::move(letters));
}

// Lexicographic comparison of two words.
std::strong_ordering word_cmp(const Word& u, const Word& v);
// Checked variant: throws AlphabetMismatch if the alphabets differ or a word
// uses a letter outside its alphabet.
std::strong_ordering word_cmp(const Alphabet& au, const Word& u, const Alphabet& av, const Word& v);

}  // namespace pbw
