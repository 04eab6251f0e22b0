#ifndef FFTP_WORD_HPP
#define FFTP_WORD_HPP

#include <compare>
#include <string>
#include <vector>

#include "fftp/alphabet.hpp"

namespace fftp {

// A word over a generator alphabet: a finite sequence of letter indices.
// Length counts edges of the path the word traces.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int operator[](int i) const { return letters_[static_cast<size_t>(i)]; }
  const std::vector<int>& letters() const { return letters_; }

  void push_back(int letter) { letters_.push_back(letter); }
  Word prefix(int len) const;
  Word suffix_from(int start) const;
  Word concat(const Word& tail) const;

  // The formal inverse word: reversed, letterwise inverted.
  Word formal_inverse(const GeneratorAlphabet& a) const;

  // Plain lexicographic order on letter indices (not length-first).
  std::strong_ordering operator<=>(const Word&) const = default;

  // Length-then-lexicographic order used by rewriting systems and for
  // "shortest, then lexicographically least" reporting.
  static bool shortlex_less(const Word& a, const Word& b);

 private:
  std::vector<int> letters_;
};

// Parses the CLI word syntax: letters are alphabet names, a trailing
// apostrophe inverts (repeatable), juxtaposition concatenates, whitespace
// optional. Throws Error{UnknownLetter} on unknown names.
Word parse_word(const GeneratorAlphabet& a, std::string_view text);

// Inverse of parse_word. Single-character names are juxtaposed; words with
// any multi-character letter name are space-separated.
std::string format_word(const GeneratorAlphabet& a, const Word& w);

}  // namespace fftp

#endif
