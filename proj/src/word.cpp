#include "fftp/word.hpp"

#include <algorithm>
#include <cctype>

#include "fftp/error.hpp"

namespace fftp {

Word Word::prefix(int len) const {
  return Word(std::vector<int>(letters_.begin(), letters_.begin() + len));
}

Word Word::suffix_from(int start) const {
  return Word(std::vector<int>(letters_.begin() + start, letters_.end()));
}

Word Word::concat(const Word& tail) const {
  std::vector<int> out = letters_;
  out.insert(out.end(), tail.letters_.begin(), tail.letters_.end());
  return Word(std::move(out));
}

Word Word::formal_inverse(const GeneratorAlphabet& a) const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(a.inv(*it));
  return Word(std::move(out));
}

bool Word::shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters_ < b.letters_;
}

Word parse_word(const GeneratorAlphabet& a, std::string_view text) {
  std::vector<int> letters;
  size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
      ++i;
    if (i == start)
      throw Error(ErrorCode::UnknownLetter,
                  "unexpected character '" + std::string(1, text[i]) + "' in word");
    std::string name(text.substr(start, i - start));
    int inversions = 0;
    while (i < text.size() && text[i] == '\'') {
      ++inversions;
      ++i;
    }
    auto letter = a.find(name);
    if (!letter)
      throw Error(ErrorCode::UnknownLetter, "letter '" + name + "' is not in the alphabet");
    int resolved = *letter;
    for (int n = 0; n < inversions; ++n) resolved = a.inv(resolved);
    letters.push_back(resolved);
  }
  return Word(std::move(letters));
}

std::string format_word(const GeneratorAlphabet& a, const Word& w) {
  bool multichar = false;
  for (int i = 0; i < a.size(); ++i) {
    const std::string& n = a.name(i);
    size_t core = n.size();
    while (core > 0 && n[core - 1] == '\'') --core;
    if (core > 1) multichar = true;
  }
  std::string out;
  for (int i = 0; i < w.size(); ++i) {
    if (multichar && i > 0) out += ' ';
    out += a.name(w[i]);
  }
  return out;
}

}  // namespace fftp
