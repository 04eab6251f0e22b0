#ifndef FFTP_ALPHABET_HPP
#define FFTP_ALPHABET_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fftp {

// A generating alphabet closed under formal inversion. Letters are dense
// indices into `name(i)`; `inv()` is an involution (a letter may be its own
// formal inverse only when declared so explicitly).
class GeneratorAlphabet {
 public:
  // `declared` lists letters in order; `inverse_pairs` pairs letter names
  // (a pair [x,x] declares a self-inverse letter). Any declared letter left
  // unpaired gets a formal inverse named "<letter>'" inserted right after it.
  // Names mentioned only inside pairs are appended in pair order.
  static GeneratorAlphabet make(std::vector<std::string> declared,
                                const std::vector<std::pair<std::string, std::string>>& inverse_pairs = {});

  int size() const { return static_cast<int>(names_.size()); }
  int inv(int letter) const { return inv_[static_cast<size_t>(letter)]; }
  const std::string& name(int letter) const { return names_[static_cast<size_t>(letter)]; }
  std::optional<int> find(std::string_view name) const;

  // True for the lower-indexed letter of each inverse pair (and for
  // self-inverse letters); used to pick one representative per edge pair.
  bool is_positive(int letter) const { return letter <= inv(letter); }

  bool operator==(const GeneratorAlphabet&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> inv_;
};

}  // namespace fftp

#endif
