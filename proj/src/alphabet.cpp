#include "fftp/alphabet.hpp"

#include <algorithm>
#include <map>

#include "fftp/error.hpp"

namespace fftp {

namespace {

bool valid_letter_name(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

}  // namespace

GeneratorAlphabet GeneratorAlphabet::make(
    std::vector<std::string> declared,
    const std::vector<std::pair<std::string, std::string>>& inverse_pairs) {
  std::map<std::string, std::string> partner;
  for (const auto& [x, y] : inverse_pairs) {
    auto put = [&](const std::string& a, const std::string& b) {
      auto [it, inserted] = partner.emplace(a, b);
      if (!inserted && it->second != b)
        throw Error(ErrorCode::ConfigError, "conflicting inverse pairing for letter '" + a + "'");
    };
    put(x, y);
    put(y, x);
  }

  // Letters mentioned only in pairs are appended after the declared ones.
  for (const auto& [x, y] : inverse_pairs) {
    for (const std::string& name : {x, y})
      if (std::find(declared.begin(), declared.end(), name) == declared.end())
        declared.push_back(name);
  }

  GeneratorAlphabet a;
  auto add = [&](const std::string& name) -> int {
    if (!valid_letter_name(name))
      throw Error(ErrorCode::ConfigError, "invalid letter name '" + name + "'");
    if (a.find(name))
      throw Error(ErrorCode::ConfigError, "duplicate letter '" + name + "'");
    a.names_.push_back(name);
    a.inv_.push_back(-1);
    return a.size() - 1;
  };

  for (const std::string& name : declared) {
    if (a.find(name)) continue;  // placed earlier as a materialized inverse
    int i = add(name);
    auto it = partner.find(name);
    if (it == partner.end()) {
      // No declared partner: materialize a formal inverse right after.
      int j = add(name + "'");
      a.inv_[static_cast<size_t>(i)] = j;
      a.inv_[static_cast<size_t>(j)] = i;
    } else if (it->second == name) {
      a.inv_[static_cast<size_t>(i)] = i;
    }
  }
  // Wire explicitly declared pairs (both letters are placed by now).
  for (const auto& [x, y] : inverse_pairs) {
    int i = *a.find(x);
    int j = *a.find(y);
    a.inv_[static_cast<size_t>(i)] = j;
    a.inv_[static_cast<size_t>(j)] = i;
  }

  for (int i = 0; i < a.size(); ++i) {
    if (a.inv_[static_cast<size_t>(i)] < 0)
      throw Error(ErrorCode::ConfigError, "letter '" + a.name(i) + "' has no inverse assigned");
    if (a.inv(a.inv(i)) != i)
      throw Error(ErrorCode::ConfigError, "inverse pairing is not an involution");
  }
  return a;
}

std::optional<int> GeneratorAlphabet::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[static_cast<size_t>(i)] == name) return i;
  return std::nullopt;
}

}  // namespace fftp
