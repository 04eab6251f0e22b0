#ifndef FFTP_DOT_HPP
#define FFTP_DOT_HPP

#include <iosfwd>
#include <string>

#include "fftp/ball.hpp"
#include "fftp/fftp.hpp"

namespace fftp {

// Graphviz export of B(n): vertices labeled with their distance from the
// identity, one undirected edge per inverse pair of generators, labeled with
// the positive letter. Deterministic: vertices in id order.
void write_ball_dot(std::ostream& os, const Ball& ball);

// Class graph of a cone-type census: nodes labeled with class id and size,
// edges only where the per-letter successor class is consistent.
void write_census_dot(std::ostream& os, const Ball& ball, const ConeCensus& census);

void write_dot_file(const std::string& path, const std::string& contents);

}  // namespace fftp

#endif
