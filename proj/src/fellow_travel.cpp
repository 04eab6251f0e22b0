#include "fftp/fellow_travel.hpp"

#include <algorithm>
#include <climits>

#include "fftp/error.hpp"

namespace fftp {

namespace {

int pair_distance(const Ball& ball, const GroupElement& a, const GroupElement& b,
                  const std::string& where) {
  try {
    return distance(ball, a, b);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::OutOfBall)
      throw Error(ErrorCode::OutOfBall, "comparison " + where + " leaves the ball");
    throw;
  }
}

}  // namespace

SyncReport sync_distance(const Ball& ball, const PathTrace& w, const PathTrace& u) {
  const int horizon = std::max(w.word.size(), u.word.size());
  SyncReport r;
  for (int t = 0; t <= horizon; ++t) {
    int d = pair_distance(ball, w.at(t), u.at(t), "at t = " + std::to_string(t));
    if (d > r.distance) {
      r.distance = d;
      r.witness_time = t;
    }
  }
  return r;
}

AsyncReport async_distance(const Ball& ball, const PathTrace& w, const PathTrace& u) {
  const int n = w.word.size();
  const int m = u.word.size();
  auto idx = [m](int i, int j) { return static_cast<size_t>(i) * static_cast<size_t>(m + 1) + static_cast<size_t>(j); };

  std::vector<int> cost(static_cast<size_t>(n + 1) * static_cast<size_t>(m + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= m; ++j)
      cost[idx(i, j)] = pair_distance(ball, w.points[static_cast<size_t>(i)], u.points[static_cast<size_t>(j)],
                                      "at grid cell (" + std::to_string(i) + ", " + std::to_string(j) + ")");

  // Suffix bottleneck: the best achievable maximum from (i, j) to the end,
  // including the cost at (i, j) itself.
  std::vector<int> best(cost.size());
  for (int i = n; i >= 0; --i) {
    for (int j = m; j >= 0; --j) {
      int tail = INT_MAX;
      if (i < n && j < m) tail = std::min(tail, best[idx(i + 1, j + 1)]);
      if (i < n) tail = std::min(tail, best[idx(i + 1, j)]);
      if (j < m) tail = std::min(tail, best[idx(i, j + 1)]);
      if (i == n && j == m) tail = cost[idx(i, j)];
      best[idx(i, j)] = std::max(cost[idx(i, j)], tail);
    }
  }

  AsyncReport r;
  r.distance = best[idx(0, 0)];
  // Deterministic matching: ties break toward the lexicographically smallest
  // step sequence with (1,1) preferred over (1,0) over (0,1).
  int i = 0, j = 0;
  r.matching.emplace_back(0, 0);
  while (i < n || j < m) {
    if (i < n && j < m && best[idx(i + 1, j + 1)] <= r.distance) {
      ++i;
      ++j;
    } else if (i < n && best[idx(i + 1, j)] <= r.distance) {
      ++i;
    } else {
      ++j;
    }
    r.matching.emplace_back(i, j);
  }
  return r;
}

AsyncSyncComparison check_async_to_sync(const Ball& ball, const Word& w, const Word& u) {
  const GroupOracle& o = ball.oracle();
  for (const Word* cand : {&w, &u}) {
    if (!is_geodesic(ball, *cand))
      throw Error(ErrorCode::NotGeodesic,
                  "word '" + format_word(o.alphabet(), *cand) + "' is not geodesic");
  }
  PathTrace tw = trace_path(o, o.identity(), w);
  PathTrace tu = trace_path(o, o.identity(), u);
  AsyncSyncComparison c;
  c.k_async = async_distance(ball, tw, tu).distance;
  c.k_sync = sync_distance(ball, tw, tu).distance;
  c.bound_holds = c.k_sync <= 2 * c.k_async;
  return c;
}

}  // namespace fftp
