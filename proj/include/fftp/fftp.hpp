#ifndef FFTP_FFTP_HPP
#define FFTP_FFTP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fftp/ball.hpp"
#include "fftp/fellow_travel.hpp"

namespace fftp {

// Whether witness searches use the synchronous or the asynchronous
// fellow-traveling condition. Synchronous is the default: its search space
// is a layered DAG, cheaper and deterministic.
enum class FtMode { Sync, Async };

// A successful shortening: a strictly shorter word equal in G that
// fellow-travels the original within k.
struct FftpWitness {
  Word original;
  Word shortened;
  int k_used = 0;
  SyncReport sync_check;  // recomputed after the search, independent of it
};

// Searches for the shortest (then lexicographically least) witness for a
// non-geodesic word w: a u with ubar = wbar, |u| < |w|, fellow-traveling w
// within k. Returns nullopt when no witness exists at this k.
// Throws AlreadyGeodesic if w is geodesic, OutOfBall if the ball cannot
// cover every comparison (needs max_t d(1, w(t)) + k <= radius).
std::optional<FftpWitness> find_shortening(const Ball& ball, const Word& w, int k,
                                           FtMode mode = FtMode::Sync);

enum class CertStatus { Certified, Refuted, Inconclusive };

// Outcome of exhaustively checking every non-geodesic word of length <= L
// (paths from the identity) for a witness at constant k.
struct FftpCertificate {
  int k = 0;
  int max_word_len = 0;
  int ball_radius = 0;
  FtMode mode = FtMode::Sync;
  CertStatus status = CertStatus::Inconclusive;
  std::optional<Word> counterexample;  // shortest, then lex-least, when Refuted
  std::string reason;                  // set when Inconclusive
  std::uint64_t words_checked = 0;
  std::uint64_t words_skipped = 0;
};

// Requires radius >= L + k so every comparison resolves. Words whose path
// exits B(radius - k) are skipped and counted; any skip downgrades
// Certified to Inconclusive. Throws BudgetExceeded past `word_cap`.
FftpCertificate certify_fftp(const Ball& ball, int k, int max_word_len,
                             FtMode mode = FtMode::Sync, int threads = 1,
                             std::uint64_t word_cap = 50'000'000);

// Linear scan k = 0, 1, ..., k_max; first certified k, or nullopt.
std::optional<int> min_fftp_constant(const Ball& ball, int max_word_len, int k_max,
                                     FtMode mode = FtMode::Sync, int threads = 1);

// Checks that asynchronous certification at k_async implies synchronous
// certification at 4 * k_async, at the same word-length bound. Requires
// k_async >= 1 (throws ProvisoViolated) and a ball of radius
// >= L + 4 * k_async. Throws PreconditionFailed if the asynchronous
// certification itself does not hold.
bool check_async_sync_equivalence(const Ball& ball, int k_async, int max_word_len, int threads = 1);

// Classes of ball vertices by truncated cone type: g and h are equivalent
// iff the same words v with |v| <= depth extend them geodesically, meaning
// d(1, g vbar) = d(1, g) + |v|. Only vertices of B(radius - depth) are
// classified (their extensions stay inside the ball).
struct ConeCensus {
  int depth = 0;
  int census_radius = 0;                        // radius - depth
  std::vector<int> class_of;                    // per classified vertex id
  std::vector<std::vector<std::uint32_t>> classes;  // members, by class id
  // transitions[c][x]: class of the x-successor when consistent across all
  // classified members of c, else -1 (the table is partial by design).
  std::vector<std::vector<int>> transitions;
};

ConeCensus cone_census(const Ball& ball, int depth);

}  // namespace fftp

#endif
