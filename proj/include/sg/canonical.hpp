#ifndef SG_CANONICAL_HPP
#define SG_CANONICAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sg/graph.hpp"

namespace sg {

/// Canonically relabeled copy of a graph plus the labeling that produced
/// it (labeling[v] = canonical position of original vertex v).  Two graphs
/// are isomorphic exactly when their canonical graphs compare equal.
struct CanonicalForm {
    Graph graph;
    std::vector<int> labeling;
};

/// Label-invariant canonical form: equitable refinement of the vertex
/// partition, then backtracking over cell orderings keeping the labeling
/// whose adjacency bit string (upper triangle, column-major) is
/// lexicographically least.
CanonicalForm canonical_form(const Graph& g);

/// graph6 string of the canonical relabeling; equal keys <=> isomorphic.
std::string canonical_key(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

namespace detail {

/// Raw canonical labeling: rows/n describe the input, out_rows receives
/// the canonical adjacency rows, labeling the vertex->position map.
void canonical_core(int n, const std::uint64_t* rows, std::uint64_t* out_rows,
                    int* labeling);

/// Packed canonical upper-triangle bits (column-major); requires n <= 11
/// so the string fits one word.  last_vertex is the original vertex that
/// the canonical labeling places at position n-1.
struct SmallCanon {
    std::uint64_t key;
    int last_vertex;
};
SmallCanon canonical_small(int n, const std::uint64_t* rows);

} // namespace detail

} // namespace sg

#endif
