#ifndef SG_GRAPH_HPP
#define SG_GRAPH_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sg/errors.hpp"

namespace sg {

/// Simple undirected graph on at most 64 vertices.  One adjacency row per
/// vertex, stored as a 64-bit mask, so neighborhood algebra is single-word
/// bit operations.  Instances are immutable after construction; every
/// operation returns a new graph.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    /// Edgeless graph on n vertices (1 <= n <= 64).
    explicit Graph(int n);

    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    /// Builds from raw adjacency rows; validates symmetry and zero diagonal.
    static Graph from_rows(int n, std::span<const std::uint64_t> rows);

    /// Copy of g with one extra vertex adjacent to the vertices in nbr_mask.
    static Graph extend(const Graph& g, std::uint64_t nbr_mask);

    int order() const { return n_; }
    int edge_count() const;
    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }
    std::uint64_t neighbors(int v) const { return rows_[v]; }
    std::uint64_t vertex_mask() const;
    int degree(int v) const;
    std::vector<int> degrees() const;
    int min_degree() const;
    int max_degree() const;
    long long triangle_count() const;

    Graph complement() const;
    Graph disjoint_union(const Graph& h) const;
    Graph join(const Graph& h) const;
    /// Induced subgraph on the set bits of keep, in ascending vertex order.
    Graph induced(std::uint64_t keep) const;
    Graph without_vertex(int v) const;
    /// Relabeled copy: vertex i of *this becomes vertex perm[i].
    Graph permuted(std::span<const int> perm) const;

    bool operator==(const Graph& o) const;

private:
    int n_;
    std::array<std::uint64_t, kMaxOrder> rows_;

    void add_edge_unchecked(int u, int v) {
        rows_[u] |= std::uint64_t{1} << v;
        rows_[v] |= std::uint64_t{1} << u;
    }
};

/// Degree statistics; biregular means exactly two distinct degrees with
/// the smaller one positive.
struct DegreeProfile {
    std::vector<int> degree_multiset; // sorted ascending
    int min_degree = 0;
    int max_degree = 0;
    bool regular = false;
    bool biregular = false;
};

DegreeProfile degree_profile(const Graph& g);

/// Structure probes used by the spectral characterization checks.
/// diameter is empty when the graph is disconnected.
struct StructuralProbe {
    bool connected = false;
    bool bipartite = false;
    std::optional<int> diameter;
    bool is_join = false; // complement disconnected
    // True when deleting isolated vertices leaves a nonempty complete
    // multipartite graph; part_sizes lists its parts (ascending).
    bool complete_multipartite_plus_isolated = false;
    std::vector<int> part_sizes;
    int isolated_count = 0;
};

StructuralProbe structural_probe(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
/// True iff g is complete bipartite K_{p,q} (p,q >= 1).
bool is_complete_bipartite(const Graph& g);

} // namespace sg

#endif
