#ifndef FFTP_FELLOW_TRAVEL_HPP
#define FFTP_FELLOW_TRAVEL_HPP

#include <cstdint>
#include <vector>

#include "fftp/ball.hpp"

namespace fftp {

// Synchronous fellow-traveler distance: max over integer t of d(w(t), u(t)),
// endpoints held constant past each path's length.
struct SyncReport {
  int distance = 0;
  int witness_time = 0;  // first t attaining the maximum
};

// Asynchronous fellow-traveler distance: minimal bottleneck over monotone
// lattice matchings of the two paths. The matching pairs (i, j) advance by
// (1,0), (0,1) or (1,1) from (0,0) to (|w|, |u|).
struct AsyncReport {
  int distance = 0;
  std::vector<std::pair<int, int>> matching;
};

SyncReport sync_distance(const Ball& ball, const PathTrace& w, const PathTrace& u);
AsyncReport async_distance(const Ball& ball, const PathTrace& w, const PathTrace& u);

// For two geodesic words from the identity: computes both distances and
// checks k_sync <= 2 * k_async. A false `bound_holds` is a bug-detector,
// not a valid outcome. Throws Error{NotGeodesic} naming the offending word.
struct AsyncSyncComparison {
  int k_async = 0;
  int k_sync = 0;
  bool bound_holds = false;
};

AsyncSyncComparison check_async_to_sync(const Ball& ball, const Word& w, const Word& u);

}  // namespace fftp

#endif
