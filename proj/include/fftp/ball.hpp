#ifndef FFTP_BALL_HPP
#define FFTP_BALL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fftp/group.hpp"
#include "fftp/word.hpp"

namespace fftp {

// The metric ball B(n) of a Cayley graph: every element at distance <= n
// from the identity, with exact graph distances and in-ball adjacency.
//
// Vertices carry dense ids assigned in breadth-first layer order, so the
// sphere S(m) is a contiguous id range and vertex 0 is the identity. The
// expansion order (vertex id, then letter index) is deterministic, which
// makes ids, BFS-tree words, and every downstream report reproducible.
// A completed Ball is immutable and safe to query concurrently.
class Ball {
 public:
  static constexpr std::uint32_t npos = UINT32_MAX;

  int radius() const { return radius_; }
  std::size_t size() const { return dist_.size(); }
  const GroupOracle& oracle() const { return *oracle_; }
  std::shared_ptr<const GroupOracle> oracle_ptr() const { return oracle_; }

  int dist(std::uint32_t id) const { return dist_[id]; }
  // In-ball neighbor by right multiplication, npos if the neighbor lies
  // outside the ball.
  std::uint32_t neighbor(std::uint32_t id, int letter) const {
    return adj_[static_cast<std::size_t>(id) * static_cast<std::size_t>(nletters_) + static_cast<std::size_t>(letter)];
  }

  // Ids of the sphere S(m) as [first, last).
  std::pair<std::uint32_t, std::uint32_t> sphere_range(int m) const;
  std::size_t sphere_size(int m) const {
    auto [a, b] = sphere_range(m);
    return b - a;
  }

  std::optional<std::uint32_t> find(const GroupElement& g) const;
  std::uint32_t id_of(const GroupElement& g) const;  // throws OutOfBall

  // Reconstructs the vertex's element by evaluating its BFS-tree word.
  GroupElement element(std::uint32_t id) const;
  // The BFS-tree word from the identity: the lexicographically least
  // geodesic for this vertex.
  Word tree_word(std::uint32_t id) const;

 private:
  friend Ball build_ball(std::shared_ptr<const GroupOracle> oracle, int radius, std::size_t vertex_cap);

  std::shared_ptr<const GroupOracle> oracle_;
  int radius_ = 0;
  int nletters_ = 0;
  std::vector<int> dist_;
  std::vector<int> parent_letter_;          // -1 for the identity
  std::vector<std::uint32_t> parent_id_;    // npos for the identity
  std::vector<std::uint32_t> adj_;          // size() * nletters_
  std::vector<std::uint32_t> layer_start_;  // layer_start_[m] = first id of S(m)
  std::unordered_map<std::string, std::uint32_t> index_;
};

// Breadth-first construction of B(radius). Throws Error{BudgetExceeded} once
// the vertex count passes `vertex_cap`.
Ball build_ball(std::shared_ptr<const GroupOracle> oracle, int radius,
                std::size_t vertex_cap = 10'000'000);

// d(g, h) = d(1, g^-1 h), exact. Throws Error{OutOfBall} if g^-1 h is not a
// ball vertex: the ball radius is insufficient for this query.
int distance(const Ball& ball, const GroupElement& g, const GroupElement& h);

// Decides d(g, h) <= bound without risk of a false negative: an absent
// difference vertex means d > radius >= bound. Requires bound <= radius.
bool distance_leq(const Ball& ball, const GroupElement& g, const GroupElement& h, int bound);

// True iff |w| = d(1, wbar). Throws OutOfBall if the endpoint cannot be
// resolved within the ball.
bool is_geodesic(const Ball& ball, const Word& w);

// All geodesic words from the identity to g, in lexicographic order,
// truncated at `cap`. Never empty for g in the ball.
std::vector<Word> enumerate_geodesics(const Ball& ball, const GroupElement& g, std::size_t cap);

// First word of enumerate_geodesics, without materializing the rest.
Word lex_least_geodesic(const Ball& ball, const GroupElement& g);

// A path in the Cayley graph based at `base`: the points w(0), ..., w(|w|).
struct PathTrace {
  GroupElement base;
  Word word;
  std::vector<GroupElement> points;  // word.size() + 1 entries

  // The path parametrization at integer times; t >= |w| returns the endpoint.
  const GroupElement& at(int t) const {
    return points[static_cast<std::size_t>(t < word.size() ? t : word.size())];
  }
  const GroupElement& endpoint() const { return points.back(); }
};

PathTrace trace_path(const GroupOracle& oracle, GroupElement base, Word w);

// w(t) for a single integer time, without materializing the whole trace.
GroupElement path_point(const GroupOracle& oracle, const GroupElement& base, const Word& w, int t);

// Exact distances from `src` to everything within `limit` steps, via
// breadth-first search over in-ball adjacency. Exactness requires
// dist(src) + limit <= radius: every geodesic to a vertex within `limit`
// then stays inside the ball. Results are (id, distance) pairs in BFS order.
std::vector<std::pair<std::uint32_t, int>> bounded_neighborhood(const Ball& ball, std::uint32_t src,
                                                                int limit);

}  // namespace fftp

#endif
