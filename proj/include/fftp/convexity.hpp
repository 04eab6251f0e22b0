#ifndef FFTP_CONVEXITY_HPP
#define FFTP_CONVEXITY_HPP

#include <cstdint>

#include "fftp/ball.hpp"
#include "fftp/fftp.hpp"

namespace fftp {

// Almost-convexity report: the largest in-ball distance between sphere
// points of S(n) at global distance <= i. C(i, n) <= 2n always, since the
// path through the identity never leaves B(n).
struct AcReport {
  int i = 0;
  int n = 0;
  int c_value = 0;
  std::uint32_t witness_g = Ball::npos;   // an extremal pair, by vertex id
  std::uint32_t witness_h = Ball::npos;
};

// Exact maximum via per-source BFS restricted to B(n). Requires n <= radius,
// i >= 1. Pairs whose global distance cannot be resolved (i > radius and the
// difference outside the ball) raise OutOfBall.
AcReport ac_constant(const Ball& ball, int i, int n, int threads = 1);

// Checks C(2, n) <= 3k for a certified constant k. The certificate must be
// Certified, synchronous, with max_word_len >= n + 2 (else ScaleMismatch).
bool check_ac_bound(const FftpCertificate& cert, const AcReport& ac);

}  // namespace fftp

#endif
