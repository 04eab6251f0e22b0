#include "fftp/group.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "fftp/error.hpp"

namespace fftp {

namespace {

constexpr int kMaxLetters = 200;

std::string word_key(const std::vector<int>& letters) {
  std::string k;
  k.reserve(letters.size());
  for (int x : letters) k.push_back(static_cast<char>(x + 1));
  return k;
}

std::string coord_key(const std::vector<long long>& c) {
  std::string k;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) k.push_back(',');
    k += std::to_string(c[i]);
  }
  return k;
}

std::string perm_key(const std::vector<int>& images) {
  std::string k;
  for (size_t i = 0; i < images.size(); ++i) {
    if (i) k.push_back(',');
    k += std::to_string(images[i]);
  }
  return k;
}

std::string affine_key(const AffineMap& m) {
  std::string k;
  for (const auto& q : m.matrix) {
    k += q.get_str();
    k.push_back(',');
  }
  k.push_back(';');
  for (const auto& q : m.vector) {
    k += q.get_str();
    k.push_back(',');
  }
  return k;
}

AffineMap affine_identity(int dim) {
  AffineMap m;
  m.dim = dim;
  m.matrix.assign(static_cast<size_t>(dim) * static_cast<size_t>(dim), mpq_class(0));
  m.vector.assign(static_cast<size_t>(dim), mpq_class(0));
  for (int i = 0; i < dim; ++i) m.matrix[static_cast<size_t>(i * dim + i)] = 1;
  return m;
}

// g then-apply-nothing composition: (g*h)(x) = g(h(x)), h applied first.
AffineMap affine_compose(const AffineMap& g, const AffineMap& h) {
  int d = g.dim;
  AffineMap r;
  r.dim = d;
  r.matrix.assign(static_cast<size_t>(d) * static_cast<size_t>(d), mpq_class(0));
  r.vector.assign(static_cast<size_t>(d), mpq_class(0));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      mpq_class s = 0;
      for (int l = 0; l < d; ++l)
        s += g.matrix[static_cast<size_t>(i * d + l)] * h.matrix[static_cast<size_t>(l * d + j)];
      r.matrix[static_cast<size_t>(i * d + j)] = s;
    }
    mpq_class s = g.vector[static_cast<size_t>(i)];
    for (int l = 0; l < d; ++l)
      s += g.matrix[static_cast<size_t>(i * d + l)] * h.vector[static_cast<size_t>(l)];
    r.vector[static_cast<size_t>(i)] = s;
  }
  return r;
}

// Gauss-Jordan inverse over Q. Throws ConfigError on a singular matrix.
AffineMap affine_invert(const AffineMap& g) {
  int d = g.dim;
  std::vector<mpq_class> a = g.matrix;
  AffineMap r = affine_identity(d);
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int row = col; row < d; ++row)
      if (a[static_cast<size_t>(row * d + col)] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0)
      throw Error(ErrorCode::ConfigError, "generator image matrix is singular");
    if (pivot != col) {
      for (int j = 0; j < d; ++j) {
        std::swap(a[static_cast<size_t>(pivot * d + j)], a[static_cast<size_t>(col * d + j)]);
        std::swap(r.matrix[static_cast<size_t>(pivot * d + j)], r.matrix[static_cast<size_t>(col * d + j)]);
      }
    }
    mpq_class inv_p = 1 / a[static_cast<size_t>(col * d + col)];
    for (int j = 0; j < d; ++j) {
      a[static_cast<size_t>(col * d + j)] *= inv_p;
      r.matrix[static_cast<size_t>(col * d + j)] *= inv_p;
    }
    for (int row = 0; row < d; ++row) {
      if (row == col) continue;
      mpq_class f = a[static_cast<size_t>(row * d + col)];
      if (f == 0) continue;
      for (int j = 0; j < d; ++j) {
        a[static_cast<size_t>(row * d + j)] -= f * a[static_cast<size_t>(col * d + j)];
        r.matrix[static_cast<size_t>(row * d + j)] -= f * r.matrix[static_cast<size_t>(col * d + j)];
      }
    }
  }
  // x -> A x + b inverts to x -> A^-1 x - A^-1 b.
  for (int i = 0; i < d; ++i) {
    mpq_class s = 0;
    for (int l = 0; l < d; ++l)
      s += r.matrix[static_cast<size_t>(i * d + l)] * g.vector[static_cast<size_t>(l)];
    r.vector[static_cast<size_t>(i)] = -s;
  }
  return r;
}

class FreeOracle final : public GroupOracle {
 public:
  explicit FreeOracle(GeneratorAlphabet a) : GroupOracle(std::move(a)) {}

  GroupElement identity() const override { return make({}); }

  GroupElement multiply(const GroupElement& g, int letter) const override {
    check_letter(letter);
    std::vector<int> w = std::get<WordVec>(g.data()).letters;
    if (!w.empty() && w.back() == alphabet().inv(letter))
      w.pop_back();
    else
      w.push_back(letter);
    return make(std::move(w));
  }

  GroupElement compose(const GroupElement& g, const GroupElement& h) const override {
    std::vector<int> w = std::get<WordVec>(g.data()).letters;
    for (int x : std::get<WordVec>(h.data()).letters) {
      if (!w.empty() && w.back() == alphabet().inv(x))
        w.pop_back();
      else
        w.push_back(x);
    }
    return make(std::move(w));
  }

  GroupElement invert(const GroupElement& g) const override {
    const auto& w = std::get<WordVec>(g.data()).letters;
    std::vector<int> r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(alphabet().inv(*it));
    return make(std::move(r));
  }

 private:
  GroupElement make(std::vector<int> w) const {
    std::string k = word_key(w);
    return GroupElement(WordVec{std::move(w)}, std::move(k));
  }
};

class FreeAbelianOracle final : public GroupOracle {
 public:
  FreeAbelianOracle(GeneratorAlphabet a, int rank) : GroupOracle(std::move(a)), rank_(rank) {
    coord_.assign(static_cast<size_t>(alphabet().size()), {0, 0});
    int next = 0;
    for (int i = 0; i < alphabet().size(); ++i) {
      if (alphabet().inv(i) == i)
        throw Error(ErrorCode::ConfigError,
                    "free abelian backend cannot host self-inverse letter '" + alphabet().name(i) + "'");
      if (i < alphabet().inv(i)) {
        coord_[static_cast<size_t>(i)] = {next, +1};
        coord_[static_cast<size_t>(alphabet().inv(i))] = {next, -1};
        ++next;
      }
    }
    if (next != rank_)
      throw Error(ErrorCode::ConfigError,
                  "free abelian rank " + std::to_string(rank_) + " does not match " +
                      std::to_string(next) + " generator pairs");
  }

  GroupElement identity() const override {
    return make(std::vector<long long>(static_cast<size_t>(rank_), 0));
  }

  GroupElement multiply(const GroupElement& g, int letter) const override {
    check_letter(letter);
    std::vector<long long> c = std::get<CoordVec>(g.data());
    auto [idx, sign] = coord_[static_cast<size_t>(letter)];
    c[static_cast<size_t>(idx)] += sign;
    return make(std::move(c));
  }

  GroupElement compose(const GroupElement& g, const GroupElement& h) const override {
    std::vector<long long> c = std::get<CoordVec>(g.data());
    const auto& d = std::get<CoordVec>(h.data());
    for (size_t i = 0; i < c.size(); ++i) c[i] += d[i];
    return make(std::move(c));
  }

  GroupElement invert(const GroupElement& g) const override {
    std::vector<long long> c = std::get<CoordVec>(g.data());
    for (auto& v : c) v = -v;
    return make(std::move(c));
  }

 private:
  GroupElement make(std::vector<long long> c) const {
    std::string k = coord_key(c);
    return GroupElement(std::move(c), std::move(k));
  }

  int rank_;
  std::vector<std::pair<int, int>> coord_;  // letter -> (coordinate, sign)
};

class MatrixAffineOracle final : public GroupOracle {
 public:
  MatrixAffineOracle(GeneratorAlphabet a, int dim, std::vector<AffineMap> images)
      : GroupOracle(std::move(a)), dim_(dim), images_(std::move(images)) {}

  GroupElement identity() const override { return make(affine_identity(dim_)); }

  GroupElement multiply(const GroupElement& g, int letter) const override {
    check_letter(letter);
    return make(affine_compose(std::get<AffineMap>(g.data()), images_[static_cast<size_t>(letter)]));
  }

  GroupElement compose(const GroupElement& g, const GroupElement& h) const override {
    return make(affine_compose(std::get<AffineMap>(g.data()), std::get<AffineMap>(h.data())));
  }

  GroupElement invert(const GroupElement& g) const override {
    return make(affine_invert(std::get<AffineMap>(g.data())));
  }

 private:
  GroupElement make(AffineMap m) const {
    std::string k = affine_key(m);
    return GroupElement(std::move(m), std::move(k));
  }

  int dim_;
  std::vector<AffineMap> images_;  // per letter
};

class PermutationOracle final : public GroupOracle {
 public:
  PermutationOracle(GeneratorAlphabet a, int degree, std::vector<std::vector<int>> images)
      : GroupOracle(std::move(a)), degree_(degree), images_(std::move(images)) {}

  GroupElement identity() const override {
    std::vector<int> id(static_cast<size_t>(degree_));
    for (int i = 0; i < degree_; ++i) id[static_cast<size_t>(i)] = i;
    return make(std::move(id));
  }

  GroupElement multiply(const GroupElement& g, int letter) const override {
    check_letter(letter);
    return make(compose_images(std::get<PermVec>(g.data()).images, images_[static_cast<size_t>(letter)]));
  }

  GroupElement compose(const GroupElement& g, const GroupElement& h) const override {
    return make(compose_images(std::get<PermVec>(g.data()).images, std::get<PermVec>(h.data()).images));
  }

  GroupElement invert(const GroupElement& g) const override {
    const auto& p = std::get<PermVec>(g.data()).images;
    std::vector<int> r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[static_cast<size_t>(p[i])] = static_cast<int>(i);
    return make(std::move(r));
  }

 private:
  // Apply g first, then h.
  static std::vector<int> compose_images(const std::vector<int>& g, const std::vector<int>& h) {
    std::vector<int> r(g.size());
    for (size_t i = 0; i < g.size(); ++i) r[i] = h[static_cast<size_t>(g[i])];
    return r;
  }

  GroupElement make(std::vector<int> p) const {
    std::string k = perm_key(p);
    return GroupElement(PermVec{std::move(p)}, std::move(k));
  }

  int degree_;
  std::vector<std::vector<int>> images_;  // per letter
};

class RewritingOracle final : public GroupOracle {
 public:
  RewritingOracle(GeneratorAlphabet a, std::vector<std::pair<Word, Word>> rules)
      : GroupOracle(std::move(a)), rules_(std::move(rules)) {
    max_lhs_ = 0;
    for (const auto& [lhs, rhs] : rules_) {
      if (lhs.empty())
        throw Error(ErrorCode::ConfigError, "rewriting rule with empty left-hand side");
      if (!Word::shortlex_less(rhs, lhs))
        throw Error(ErrorCode::ConfigError,
                    "rewriting rule does not strictly reduce the length-then-lex order");
      max_lhs_ = std::max(max_lhs_, lhs.size());
    }
    check_local_confluence();
  }

  GroupElement identity() const override { return make({}); }

  GroupElement multiply(const GroupElement& g, int letter) const override {
    check_letter(letter);
    std::vector<int> w = std::get<WordVec>(g.data()).letters;
    w.push_back(letter);
    // Suffix was already normal: rewriting can only fire near the new end.
    normalize(w, std::max(0, static_cast<int>(w.size()) - max_lhs_));
    return make(std::move(w));
  }

  GroupElement compose(const GroupElement& g, const GroupElement& h) const override {
    std::vector<int> w = std::get<WordVec>(g.data()).letters;
    const auto& tail = std::get<WordVec>(h.data()).letters;
    w.insert(w.end(), tail.begin(), tail.end());
    normalize(w, 0);
    return make(std::move(w));
  }

  GroupElement invert(const GroupElement& g) const override {
    const auto& w = std::get<WordVec>(g.data()).letters;
    std::vector<int> r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(alphabet().inv(*it));
    normalize(r, 0);
    return make(std::move(r));
  }

  std::vector<int> normal_form(std::vector<int> w) const {
    normalize(w, 0);
    return w;
  }

 private:
  GroupElement make(std::vector<int> w) const {
    std::string k = word_key(w);
    return GroupElement(WordVec{std::move(w)}, std::move(k));
  }

  bool rule_applies(const Word& lhs, const std::vector<int>& w, int pos) const {
    if (pos + lhs.size() > static_cast<int>(w.size())) return false;
    for (int i = 0; i < lhs.size(); ++i)
      if (w[static_cast<size_t>(pos + i)] != lhs[i]) return false;
    return true;
  }

  // Leftmost position, lowest rule index. Terminates because every step
  // strictly reduces shortlex, a well-order.
  void normalize(std::vector<int>& w, int from) const {
    int pos = from;
    while (pos < static_cast<int>(w.size())) {
      bool fired = false;
      for (size_t r = 0; r < rules_.size(); ++r) {
        const auto& [lhs, rhs] = rules_[r];
        if (!rule_applies(lhs, w, pos)) continue;
        std::vector<int> next(w.begin(), w.begin() + pos);
        next.insert(next.end(), rhs.letters().begin(), rhs.letters().end());
        next.insert(next.end(), w.begin() + pos + lhs.size(), w.end());
        w = std::move(next);
        pos = std::max(0, pos - max_lhs_ + 1);
        fired = true;
        break;
      }
      if (!fired) ++pos;
    }
  }

  // Desk-scale local confluence: every critical pair (suffix-prefix overlap
  // or factor containment) must have both descendants normalize equal.
  void check_local_confluence() const {
    auto nf = [&](std::vector<int> w) {
      normalize(w, 0);
      return w;
    };
    for (size_t i = 0; i < rules_.size(); ++i) {
      for (size_t j = 0; j < rules_.size(); ++j) {
        const auto& [li, ri] = rules_[i];
        const auto& [lj, rj] = rules_[j];
        // Overlap: proper suffix of li equals proper prefix of lj.
        for (int o = 1; o < std::min(li.size(), lj.size()); ++o) {
          bool match = true;
          for (int t = 0; t < o; ++t)
            if (li[li.size() - o + t] != lj[t]) {
              match = false;
              break;
            }
          if (!match) continue;
          // Superposition li + lj[o:].
          std::vector<int> left = ri.letters();
          for (int t = o; t < lj.size(); ++t) left.push_back(lj[t]);
          std::vector<int> right(li.letters().begin(), li.letters().end() - o);
          right.insert(right.end(), rj.letters().begin(), rj.letters().end());
          if (nf(std::move(left)) != nf(std::move(right)))
            confluence_failure(i, j);
        }
        // Containment: lj occurs inside li.
        if (lj.size() <= li.size()) {
          for (int p = 0; p + lj.size() <= li.size(); ++p) {
            if (i == j && p == 0 && lj.size() == li.size()) continue;
            if (!rule_applies(lj, li.letters(), p)) continue;
            std::vector<int> left = ri.letters();
            std::vector<int> right(li.letters().begin(), li.letters().begin() + p);
            right.insert(right.end(), rj.letters().begin(), rj.letters().end());
            right.insert(right.end(), li.letters().begin() + p + lj.size(), li.letters().end());
            if (nf(std::move(left)) != nf(std::move(right)))
              confluence_failure(i, j);
          }
        }
      }
    }
  }

  [[noreturn]] void confluence_failure(size_t i, size_t j) const {
    throw Error(ErrorCode::ConfigError,
                "rewriting system is not locally confluent (rules " + std::to_string(i) + " and " +
                    std::to_string(j) + " have a diverging critical pair)");
  }

  std::vector<std::pair<Word, Word>> rules_;
  int max_lhs_ = 0;
};

using nlohmann::json;

GeneratorAlphabet alphabet_from_json(const json& j) {
  if (!j.contains("letters") || !j["letters"].is_array())
    throw Error(ErrorCode::ConfigError, "alphabet.letters must be an array of names");
  std::vector<std::string> letters;
  for (const auto& v : j["letters"]) letters.push_back(v.get<std::string>());
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("inverses")) {
    for (const auto& p : j["inverses"]) {
      if (!p.is_array() || p.size() != 2)
        throw Error(ErrorCode::ConfigError, "alphabet.inverses entries must be pairs");
      pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
  }
  return GeneratorAlphabet::make(std::move(letters), pairs);
}

mpq_class rational_from_json(const json& v) {
  if (v.is_number_integer()) return mpq_class(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw Error(ErrorCode::ConfigError, "rational entries must be strings like \"p/q\" or integers");
}

AffineMap affine_from_json(const json& v, int dim) {
  AffineMap m;
  m.dim = dim;
  if (!v.contains("matrix"))
    throw Error(ErrorCode::ConfigError, "matrix_affine image needs a \"matrix\"");
  const auto& rows = v["matrix"];
  if (static_cast<int>(rows.size()) != dim)
    throw Error(ErrorCode::ConfigError, "image matrix has wrong row count");
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dim)
      throw Error(ErrorCode::ConfigError, "image matrix has wrong column count");
    for (const auto& e : row) m.matrix.push_back(rational_from_json(e));
  }
  if (v.contains("vector")) {
    const auto& vec = v["vector"];
    if (static_cast<int>(vec.size()) != dim)
      throw Error(ErrorCode::ConfigError, "image vector has wrong length");
    for (const auto& e : vec) m.vector.push_back(rational_from_json(e));
  } else {
    m.vector.assign(static_cast<size_t>(dim), mpq_class(0));
  }
  return m;
}

BackendConfig backend_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "free") return FreeConfig{};
  if (kind == "free_abelian") {
    FreeAbelianConfig c;
    c.rank = j.at("rank").get<int>();
    return c;
  }
  if (kind == "matrix_affine") {
    MatrixAffineConfig c;
    if (!j.contains("images") || j["images"].empty())
      throw Error(ErrorCode::ConfigError, "matrix_affine backend needs generator images");
    // Dimension from the first image unless given explicitly.
    if (j.contains("dim"))
      c.dim = j.at("dim").get<int>();
    else
      c.dim = static_cast<int>(j["images"].begin()->at("matrix").size());
    for (auto it = j["images"].begin(); it != j["images"].end(); ++it)
      c.images.emplace(it.key(), affine_from_json(it.value(), c.dim));
    return c;
  }
  if (kind == "permutation") {
    PermutationConfig c;
    c.degree = j.at("degree").get<int>();
    for (auto it = j.at("images").begin(); it != j.at("images").end(); ++it)
      c.images.emplace(it.key(), it.value().get<std::vector<int>>());
    return c;
  }
  if (kind == "rewriting") {
    RewritingConfig c;
    for (const auto& r : j.at("rules")) {
      if (!r.is_array() || r.size() != 2)
        throw Error(ErrorCode::ConfigError, "rewriting rules must be [lhs, rhs] pairs");
      c.rules.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
    }
    return c;
  }
  throw Error(ErrorCode::ConfigError, "unknown backend kind '" + kind + "'");
}

}  // namespace

void GroupOracle::check_letter(int letter) const {
  if (letter < 0 || letter >= alphabet_.size())
    throw Error(ErrorCode::UnknownLetter, "letter index " + std::to_string(letter) + " out of range");
}

GroupElement GroupOracle::eval_word(const Word& w) const {
  GroupElement g = identity();
  for (int i = 0; i < w.size(); ++i) g = multiply(g, w[i]);
  return g;
}

mpq_class parse_rational(const std::string& text) {
  auto fail = [&]() -> mpq_class {
    throw Error(ErrorCode::ConfigError, "invalid rational '" + text + "'");
  };
  size_t slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto digits_ok = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    size_t i = 0;
    if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!digits_ok(num, true) || !digits_ok(den, false)) return fail();
  mpz_class p(num), q(den);
  if (q <= 0) return fail();
  mpq_class r(p, q);
  r.canonicalize();
  return r;
}

GroupSpec GroupSpec::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ConfigError, std::string("group spec is not valid JSON: ") + e.what());
  }
  try {
    GroupSpec spec{alphabet_from_json(j.at("alphabet")), backend_from_json(j.at("backend"))};
    return spec;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ConfigError, std::string("malformed group spec: ") + e.what());
  }
}

GroupSpec GroupSpec::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open group spec '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

namespace {

// Resolves per-letter images from a name-keyed map: positive letters must be
// given; inverse-letter images are derived (or validated when explicit).
template <typename Image>
std::vector<Image> resolve_images(const GeneratorAlphabet& a,
                                  const std::map<std::string, Image>& by_name,
                                  const Image& id, Image (*invert)(const Image&),
                                  bool (*equal)(const Image&, const Image&),
                                  Image (*mul)(const Image&, const Image&)) {
  for (const auto& [name, img] : by_name) {
    (void)img;
    if (!a.find(name))
      throw Error(ErrorCode::ConfigError, "image given for unknown letter '" + name + "'");
  }
  std::vector<Image> images(static_cast<size_t>(a.size()), id);
  std::vector<bool> have(static_cast<size_t>(a.size()), false);
  for (int i = 0; i < a.size(); ++i) {
    auto it = by_name.find(a.name(i));
    if (it != by_name.end()) {
      images[static_cast<size_t>(i)] = it->second;
      have[static_cast<size_t>(i)] = true;
    }
  }
  for (int i = 0; i < a.size(); ++i) {
    int j = a.inv(i);
    if (have[static_cast<size_t>(i)]) continue;
    if (!have[static_cast<size_t>(j)])
      throw Error(ErrorCode::ConfigError, "no image for generator '" + a.name(i) + "'");
    images[static_cast<size_t>(i)] = invert(images[static_cast<size_t>(j)]);
    have[static_cast<size_t>(i)] = true;
  }
  for (int i = 0; i < a.size(); ++i) {
    int j = a.inv(i);
    if (!equal(mul(images[static_cast<size_t>(i)], images[static_cast<size_t>(j)]), id))
      throw Error(ErrorCode::ConfigError, "images of '" + a.name(i) + "' and '" + a.name(j) +
                                              "' do not compose to the identity");
  }
  return images;
}

}  // namespace

std::shared_ptr<const GroupOracle> make_oracle(const GroupSpec& spec) {
  const GeneratorAlphabet& a = spec.alphabet;
  if (a.size() == 0) throw Error(ErrorCode::ConfigError, "alphabet is empty");
  if (a.size() > kMaxLetters)
    throw Error(ErrorCode::ConfigError, "alphabet exceeds " + std::to_string(kMaxLetters) + " letters");

  if (std::holds_alternative<FreeConfig>(spec.backend)) {
    return std::make_shared<FreeOracle>(a);
  }
  if (const auto* c = std::get_if<FreeAbelianConfig>(&spec.backend)) {
    return std::make_shared<FreeAbelianOracle>(a, c->rank);
  }
  if (const auto* c = std::get_if<MatrixAffineConfig>(&spec.backend)) {
    if (c->dim <= 0) throw Error(ErrorCode::ConfigError, "matrix_affine dimension must be positive");
    for (const auto& [name, img] : c->images)
      if (img.dim != c->dim ||
          img.matrix.size() != static_cast<size_t>(c->dim) * static_cast<size_t>(c->dim))
        throw Error(ErrorCode::ConfigError, "image for '" + name + "' has inconsistent dimension");
    auto inv = +[](const AffineMap& m) { return affine_invert(m); };
    auto eq = +[](const AffineMap& x, const AffineMap& y) { return x == y; };
    auto mul = +[](const AffineMap& x, const AffineMap& y) { return affine_compose(x, y); };
    auto images = resolve_images<AffineMap>(a, c->images, affine_identity(c->dim), inv, eq, mul);
    return std::make_shared<MatrixAffineOracle>(a, c->dim, std::move(images));
  }
  if (const auto* c = std::get_if<PermutationConfig>(&spec.backend)) {
    if (c->degree <= 0) throw Error(ErrorCode::ConfigError, "permutation degree must be positive");
    std::vector<int> id(static_cast<size_t>(c->degree));
    for (int i = 0; i < c->degree; ++i) id[static_cast<size_t>(i)] = i;
    for (const auto& [name, img] : c->images) {
      if (static_cast<int>(img.size()) != c->degree)
        throw Error(ErrorCode::ConfigError, "image for '" + name + "' has wrong degree");
      std::vector<bool> seen(static_cast<size_t>(c->degree), false);
      for (int v : img) {
        if (v < 0 || v >= c->degree || seen[static_cast<size_t>(v)])
          throw Error(ErrorCode::ConfigError, "image for '" + name + "' is not a permutation");
        seen[static_cast<size_t>(v)] = true;
      }
    }
    using P = std::vector<int>;
    auto inv = +[](const P& p) {
      P r(p.size());
      for (size_t i = 0; i < p.size(); ++i) r[static_cast<size_t>(p[i])] = static_cast<int>(i);
      return r;
    };
    auto eq = +[](const P& x, const P& y) { return x == y; };
    auto mul = +[](const P& x, const P& y) {
      P r(x.size());
      for (size_t i = 0; i < x.size(); ++i) r[i] = y[static_cast<size_t>(x[i])];
      return r;
    };
    auto images = resolve_images<P>(a, c->images, id, inv, eq, mul);
    return std::make_shared<PermutationOracle>(a, c->degree, std::move(images));
  }
  const auto& c = std::get<RewritingConfig>(spec.backend);
  std::vector<std::pair<Word, Word>> rules;
  for (const auto& [lhs, rhs] : c.rules)
    rules.emplace_back(parse_word(a, lhs), parse_word(a, rhs));
  return std::make_shared<RewritingOracle>(a, std::move(rules));
}

}  // namespace fftp
