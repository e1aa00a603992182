#ifndef SG_GRAPH6_HPP
#define SG_GRAPH6_HPP

#include <string>
#include <string_view>

#include "sg/graph.hpp"

namespace sg {

/// Standard graph6 encoding: order as 63+n for n <= 62 (the long form
/// '~' + 18 bits for 63..64), then the upper triangle column-major in
/// 6-bit groups, each offset by 63.
std::string graph6_encode(const Graph& g);

/// Inverse of graph6_encode; throws decode_error with the failing offset.
Graph graph6_decode(std::string_view s);

/// DOT rendering with vertex ids 0..n-1 and each edge listed once.
std::string dot_export(const Graph& g);

} // namespace sg

#endif
