#ifndef SG_EXPR_HPP
#define SG_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sg/graph.hpp"

namespace sg {

/// Multicone K_r v sK_t: clique of size r joined to s copies of K_t.
struct MulticoneParams {
    int r = 1, s = 1, t = 1;
    int order() const { return r + s * t; }
    long long edge_count() const {
        return static_cast<long long>(r) * (r - 1) / 2 +
               static_cast<long long>(r) * s * t +
               static_cast<long long>(s) * t * (t - 1) / 2;
    }
};

/// Parse tree of the graph-construction language.
///
/// Atoms: Kn Cn Pn En (complete/cycle/path/empty), K{a,b,...} (complete
/// multipartite), Fs (friendship), M(r,s,t) (multicone).  Operators:
/// '+' disjoint union (loosest), 'v' or the nabla glyph for join,
/// 'k*' for k disjoint copies, '~' for complement.
struct GraphExpr {
    enum class Kind {
        Complete,
        Cycle,
        Path,
        Empty,
        CompleteMultipartite,
        Multicone,
        Friendship,
        Union,
        Join,
        Complement,
        Copies,
    };

    Kind kind;
    std::vector<int> params;                              // sizes / (r,s,t) / copy count
    std::vector<std::shared_ptr<const GraphExpr>> children;

    static GraphExpr complete(int n);
    static GraphExpr cycle(int n);
    static GraphExpr path(int n);
    static GraphExpr empty(int n);
    static GraphExpr complete_multipartite(std::vector<int> parts);
    static GraphExpr multicone(int r, int s, int t);
    static GraphExpr friendship(int s);
    static GraphExpr disjoint_union(std::vector<GraphExpr> parts);
    static GraphExpr join(GraphExpr lhs, GraphExpr rhs);
    static GraphExpr complement(GraphExpr inner);
    static GraphExpr copies(int k, GraphExpr inner);

    /// Order of the evaluated graph, computed without building it.
    long long order() const;

    std::string to_string() const;
};

GraphExpr parse_graph_expression(std::string_view text);

Graph evaluate_expression(const GraphExpr& e, int max_order = Graph::kMaxOrder);

Graph build_multicone(const MulticoneParams& p, int max_order = Graph::kMaxOrder);

/// Convenience constructors for the standard families.
Graph make_complete(int n);
Graph make_cycle(int n);
Graph make_path(int n);
Graph make_empty(int n);
Graph make_complete_multipartite(const std::vector<int>& parts);
Graph make_friendship(int s);

} // namespace sg

#endif
