#ifndef FFTP_GROUP_HPP
#define FFTP_GROUP_HPP

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "fftp/alphabet.hpp"
#include "fftp/word.hpp"

namespace fftp {

// Exact rational affine map x -> A x + b on Q^d, row-major.
struct AffineMap {
  int dim = 0;
  std::vector<mpq_class> matrix;  // dim * dim
  std::vector<mpq_class> vector;  // dim

  bool operator==(const AffineMap&) const = default;
};

// Reduced (free) or normal-form (rewriting) word payload.
struct WordVec {
  std::vector<int> letters;
  bool operator==(const WordVec&) const = default;
};

// Permutation payload: 0-based image list.
struct PermVec {
  std::vector<int> images;
  bool operator==(const PermVec&) const = default;
};

using CoordVec = std::vector<long long>;  // free-abelian coordinates

using ElementData = std::variant<WordVec, CoordVec, AffineMap, PermVec>;

// A group element in backend canonical form, tagged with a canonical key.
// Two elements are equal iff their keys are equal; keys are hashable and
// stable across runs, so balls can be stored as hash maps keyed by them.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(ElementData data, std::string key)
      : data_(std::move(data)), key_(std::move(key)) {}

  const std::string& key() const { return key_; }
  const ElementData& data() const { return data_; }

  bool operator==(const GroupElement& o) const { return key_ == o.key_; }

 private:
  ElementData data_;
  std::string key_;
};

// Exact group arithmetic behind every Cayley computation. All operations are
// pure functions of immutable inputs; a const oracle is safe to share across
// threads.
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;

  const GeneratorAlphabet& alphabet() const { return alphabet_; }

  virtual GroupElement identity() const = 0;
  virtual GroupElement multiply(const GroupElement& g, int letter) const = 0;
  virtual GroupElement compose(const GroupElement& g, const GroupElement& h) const = 0;
  virtual GroupElement invert(const GroupElement& g) const = 0;

  // Letter-by-letter fold of multiply over the identity.
  GroupElement eval_word(const Word& w) const;
  GroupElement generator(int letter) const { return multiply(identity(), letter); }

 protected:
  explicit GroupOracle(GeneratorAlphabet a) : alphabet_(std::move(a)) {}

  void check_letter(int letter) const;

 private:
  GeneratorAlphabet alphabet_;
};

// Backend configurations.
struct FreeConfig {};
struct FreeAbelianConfig {
  int rank = 0;  // must equal the number of positive letters
};
struct MatrixAffineConfig {
  int dim = 0;
  std::map<std::string, AffineMap> images;  // by letter name; inverses optional
};
struct PermutationConfig {
  int degree = 0;
  std::map<std::string, std::vector<int>> images;  // 0-based image lists
};
struct RewritingConfig {
  // Ordered rules as words over the alphabet; each must strictly reduce the
  // length-then-lexicographic order, and the system must be locally confluent
  // on all critical pairs (checked at construction, rejected otherwise).
  std::vector<std::pair<std::string, std::string>> rules;
};

using BackendConfig =
    std::variant<FreeConfig, FreeAbelianConfig, MatrixAffineConfig, PermutationConfig, RewritingConfig>;

struct GroupSpec {
  GeneratorAlphabet alphabet;
  BackendConfig backend;

  static GroupSpec from_json_text(const std::string& text);
  static GroupSpec from_file(const std::string& path);
};

// Builds and validates the backend. Throws Error{ConfigError} on invalid
// images, non-reducing rewrite rules, or a locally non-confluent system.
std::shared_ptr<const GroupOracle> make_oracle(const GroupSpec& spec);

// Bit-exact rational parsing: "p/q" or "p", optional sign on p, q > 0.
mpq_class parse_rational(const std::string& text);

}  // namespace fftp

#endif
