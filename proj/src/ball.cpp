#include "fftp/ball.hpp"

#include <algorithm>
#include <queue>

#include "fftp/error.hpp"

namespace fftp {

namespace {
constexpr std::uint32_t kUnset = UINT32_MAX - 1;
}

std::pair<std::uint32_t, std::uint32_t> Ball::sphere_range(int m) const {
  if (m < 0 || m > radius_) return {0, 0};
  return {layer_start_[static_cast<size_t>(m)], layer_start_[static_cast<size_t>(m) + 1]};
}

std::optional<std::uint32_t> Ball::find(const GroupElement& g) const {
  auto it = index_.find(g.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t Ball::id_of(const GroupElement& g) const {
  auto id = find(g);
  if (!id)
    throw Error(ErrorCode::OutOfBall,
                "element is not a vertex of B(" + std::to_string(radius_) + ")");
  return *id;
}

Word Ball::tree_word(std::uint32_t id) const {
  std::vector<int> letters;
  while (id != 0) {
    letters.push_back(parent_letter_[id]);
    id = parent_id_[id];
  }
  std::reverse(letters.begin(), letters.end());
  return Word(std::move(letters));
}

GroupElement Ball::element(std::uint32_t id) const {
  return oracle_->eval_word(tree_word(id));
}

Ball build_ball(std::shared_ptr<const GroupOracle> oracle, int radius, std::size_t vertex_cap) {
  if (radius < 0) throw Error(ErrorCode::PreconditionFailed, "ball radius must be >= 0");
  const GeneratorAlphabet& alpha = oracle->alphabet();
  const int nl = alpha.size();

  Ball ball;
  ball.oracle_ = oracle;
  ball.radius_ = radius;
  ball.nletters_ = nl;

  // Elements are kept only while building; the finished ball stores the
  // key index plus BFS-tree parents and reconstructs elements on demand.
  std::vector<GroupElement> elements;

  auto add_vertex = [&](GroupElement g, int dist, std::uint32_t parent, int letter) {
    std::uint32_t id = static_cast<std::uint32_t>(elements.size());
    if (elements.size() >= vertex_cap)
      throw Error(ErrorCode::BudgetExceeded,
                  "ball exceeds the vertex cap of " + std::to_string(vertex_cap));
    ball.index_.emplace(g.key(), id);
    elements.push_back(std::move(g));
    ball.dist_.push_back(dist);
    ball.parent_id_.push_back(parent);
    ball.parent_letter_.push_back(letter);
    ball.adj_.insert(ball.adj_.end(), static_cast<size_t>(nl), kUnset);
    return id;
  };

  ball.layer_start_.push_back(0);
  add_vertex(oracle->identity(), 0, Ball::npos, -1);

  // Layer-synchronous BFS: distances are assigned on first visit. Vertices
  // are expanded in id order, letters in alphabet order, so ids and BFS-tree
  // parents are deterministic.
  std::uint32_t layer_begin = 0;
  for (int d = 0; d < radius; ++d) {
    std::uint32_t layer_end = static_cast<std::uint32_t>(elements.size());
    ball.layer_start_.push_back(layer_end);
    if (layer_begin == layer_end) break;  // finite group exhausted early
    for (std::uint32_t v = layer_begin; v < layer_end; ++v) {
      for (int x = 0; x < nl; ++x) {
        GroupElement g = oracle->multiply(elements[v], x);
        auto it = ball.index_.find(g.key());
        std::uint32_t u;
        if (it == ball.index_.end())
          u = add_vertex(std::move(g), d + 1, v, x);
        else
          u = it->second;
        ball.adj_[static_cast<size_t>(v) * static_cast<size_t>(nl) + static_cast<size_t>(x)] = u;
        ball.adj_[static_cast<size_t>(u) * static_cast<size_t>(nl) + static_cast<size_t>(alpha.inv(x))] = v;
      }
    }
    layer_begin = layer_end;
  }
  while (static_cast<int>(ball.layer_start_.size()) <= radius)
    ball.layer_start_.push_back(static_cast<std::uint32_t>(elements.size()));
  ball.layer_start_.push_back(static_cast<std::uint32_t>(elements.size()));

  // Boundary pass: vertices of the outermost layer were never expanded, so
  // edges among them are still unset. Resolve them by direct lookup; a miss
  // means the neighbor lies outside the ball.
  for (std::uint32_t v = 0; v < elements.size(); ++v) {
    for (int x = 0; x < nl; ++x) {
      auto& slot = ball.adj_[static_cast<size_t>(v) * static_cast<size_t>(nl) + static_cast<size_t>(x)];
      if (slot != kUnset) continue;
      GroupElement g = oracle->multiply(elements[v], x);
      auto it = ball.index_.find(g.key());
      slot = it == ball.index_.end() ? Ball::npos : it->second;
    }
  }
  return ball;
}

int distance(const Ball& ball, const GroupElement& g, const GroupElement& h) {
  const GroupOracle& o = ball.oracle();
  GroupElement diff = o.compose(o.invert(g), h);
  auto id = ball.find(diff);
  if (!id)
    throw Error(ErrorCode::OutOfBall,
                "d(g, h) exceeds the ball radius " + std::to_string(ball.radius()) +
                    "; rebuild with a larger radius");
  return ball.dist(*id);
}

bool distance_leq(const Ball& ball, const GroupElement& g, const GroupElement& h, int bound) {
  if (bound < 0) return false;
  if (bound > ball.radius())
    throw Error(ErrorCode::OutOfBall,
                "cannot decide d <= " + std::to_string(bound) + " with ball radius " +
                    std::to_string(ball.radius()));
  const GroupOracle& o = ball.oracle();
  GroupElement diff = o.compose(o.invert(g), h);
  auto id = ball.find(diff);
  return id && ball.dist(*id) <= bound;
}

bool is_geodesic(const Ball& ball, const Word& w) {
  GroupElement end = ball.oracle().eval_word(w);
  auto id = ball.find(end);
  if (!id)
    throw Error(ErrorCode::OutOfBall, "word endpoint lies outside the ball");
  return ball.dist(*id) == w.size();
}

namespace {

void geodesic_dfs(const Ball& ball, const GroupOracle& o, const GroupElement& target,
                  int d_total, const GroupElement& cur, Word& word, std::vector<Word>& out,
                  std::size_t cap) {
  if (out.size() >= cap) return;
  if (word.size() == d_total) {
    out.push_back(word);
    return;
  }
  const int remaining = d_total - word.size() - 1;
  for (int x = 0; x < o.alphabet().size(); ++x) {
    GroupElement next = o.multiply(cur, x);
    GroupElement diff = o.compose(o.invert(next), target);
    auto id = ball.find(diff);
    if (!id || ball.dist(*id) != remaining) continue;  // not a geodesic step
    word.push_back(x);
    geodesic_dfs(ball, o, target, d_total, next, word, out, cap);
    word = word.prefix(word.size() - 1);
    if (out.size() >= cap) return;
  }
}

}  // namespace

std::vector<Word> enumerate_geodesics(const Ball& ball, const GroupElement& g, std::size_t cap) {
  const GroupOracle& o = ball.oracle();
  int d_total = ball.dist(ball.id_of(g));
  std::vector<Word> out;
  if (cap == 0) return out;
  Word word;
  geodesic_dfs(ball, o, g, d_total, o.identity(), word, out, cap);
  return out;
}

Word lex_least_geodesic(const Ball& ball, const GroupElement& g) {
  return ball.tree_word(ball.id_of(g));
}

PathTrace trace_path(const GroupOracle& oracle, GroupElement base, Word w) {
  PathTrace t;
  t.base = std::move(base);
  t.points.reserve(static_cast<size_t>(w.size()) + 1);
  t.points.push_back(t.base);
  for (int i = 0; i < w.size(); ++i) t.points.push_back(oracle.multiply(t.points.back(), w[i]));
  t.word = std::move(w);
  return t;
}

GroupElement path_point(const GroupOracle& oracle, const GroupElement& base, const Word& w, int t) {
  if (t < 0) throw Error(ErrorCode::PreconditionFailed, "path time must be >= 0");
  GroupElement g = base;
  const int steps = std::min(t, w.size());
  for (int i = 0; i < steps; ++i) g = oracle.multiply(g, w[i]);
  return g;
}

std::vector<std::pair<std::uint32_t, int>> bounded_neighborhood(const Ball& ball, std::uint32_t src,
                                                                int limit) {
  if (ball.dist(src) + limit > ball.radius())
    throw Error(ErrorCode::OutOfBall,
                "neighborhood of depth " + std::to_string(limit) +
                    " is not covered: dist(src) + depth exceeds the ball radius");
  std::vector<std::pair<std::uint32_t, int>> out;
  std::unordered_map<std::uint32_t, int> seen;
  out.emplace_back(src, 0);
  seen.emplace(src, 0);
  std::size_t head = 0;
  const int nl = ball.oracle().alphabet().size();
  while (head < out.size()) {
    auto [v, d] = out[head++];
    if (d == limit) continue;
    for (int x = 0; x < nl; ++x) {
      std::uint32_t u = ball.neighbor(v, x);
      if (u == Ball::npos || seen.count(u)) continue;
      seen.emplace(u, d + 1);
      out.emplace_back(u, d + 1);
    }
  }
  return out;
}

}  // namespace fftp
