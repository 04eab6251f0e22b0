#ifndef FFTP_FILLING_HPP
#define FFTP_FILLING_HPP

#include <vector>

#include "fftp/ball.hpp"
#include "fftp/bounds.hpp"
#include "fftp/word.hpp"

namespace fftp {

// A quadratic-area filling of a loop: the ladder of successively shorter
// words w = w_0, w_1, ..., w_m with w_m empty, consecutive rungs equal in G
// and fellow-traveling within k. Corridor cells between consecutive rungs
// have perimeter at most 2k+2.
struct Filling {
  int k = 0;
  std::vector<Word> ladder;      // includes w_0 and the final empty word
  long long cells = 0;           // <= |w|^2
  int max_perimeter = 0;         // <= 2k+2
  int max_vertex_radius = 0;     // over every rung point and cross-path point
};

// Builds the ladder by repeated shortening and counts corridor cells:
// one cell per time step t in [0, max(|w_j|, |w_{j+1}|)), skipped only when
// both edges and both cross-paths coincide (a fully collapsed cell). The
// cross-path at time t is the lexicographically least geodesic between
// w_j(t) and w_{j+1}(t). Over-counting degenerate cells is safe; the bound
// |w|^2 must never be exceeded.
// Throws NotALoop if wbar != 1, WitnessNotFound(rung) if k is too small at
// some rung, OutOfBall if the ball cannot cover the search.
Filling fill_loop(const Ball& ball, int k, const Word& w);

// In-ball filling-radius check: with every vertex of the input loop in B(r)
// and s the loop length, every vertex of the ladder corridors must lie in
// B(r + (2k+2) * rho(s)).
bool check_filling_radius(const Ball& ball, const Filling& filling, int r, const IsoProfile& rho);

}  // namespace fftp

#endif
