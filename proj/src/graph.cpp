#include "sg/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace sg {

namespace {

void check_order(int n) {
    if (n < 1)
        throw precondition_error("graph order must be >= 1");
    if (n > Graph::kMaxOrder)
        throw capacity_error("graph order " + std::to_string(n) + " exceeds capacity " +
                             std::to_string(Graph::kMaxOrder));
}

} // namespace

Graph::Graph(int n) : n_(n) {
    check_order(n);
    rows_.fill(0);
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<std::pair<int, int>> v(edges);
    return from_edges(n, std::span<const std::pair<int, int>>(v));
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw precondition_error("edge endpoint out of range");
        if (u == v)
            throw precondition_error("loops are not allowed");
        g.add_edge_unchecked(u, v);
    }
    return g;
}

Graph Graph::from_rows(int n, std::span<const std::uint64_t> rows) {
    check_order(n);
    if (static_cast<int>(rows.size()) != n)
        throw precondition_error("row count does not match order");
    std::uint64_t allowed = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        if (rows[i] & ~allowed)
            throw precondition_error("adjacency bits beyond order");
        if ((rows[i] >> i) & 1u)
            throw precondition_error("nonzero diagonal");
        g.rows_[i] = rows[i];
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j) != g.adjacent(j, i))
                throw precondition_error("adjacency not symmetric");
    return g;
}

Graph Graph::extend(const Graph& g, std::uint64_t nbr_mask) {
    int n = g.n_ + 1;
    check_order(n);
    std::uint64_t allowed = (std::uint64_t{1} << g.n_) - 1;
    if (g.n_ == 64 || (nbr_mask & ~allowed))
        throw precondition_error("extension neighborhood out of range");
    Graph h(n);
    h.rows_ = g.rows_;
    h.rows_[n - 1] = nbr_mask;
    while (nbr_mask) {
        int v = std::countr_zero(nbr_mask);
        nbr_mask &= nbr_mask - 1;
        h.rows_[v] |= std::uint64_t{1} << (n - 1);
    }
    return h;
}

int Graph::edge_count() const {
    int total = 0;
    for (int i = 0; i < n_; ++i) total += std::popcount(rows_[i]);
    return total / 2;
}

std::uint64_t Graph::vertex_mask() const {
    return (n_ == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
}

int Graph::degree(int v) const { return std::popcount(rows_[v]); }

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int i = 0; i < n_; ++i) d[i] = degree(i);
    return d;
}

int Graph::min_degree() const {
    int m = kMaxOrder;
    for (int i = 0; i < n_; ++i) m = std::min(m, degree(i));
    return m;
}

int Graph::max_degree() const {
    int m = 0;
    for (int i = 0; i < n_; ++i) m = std::max(m, degree(i));
    return m;
}

long long Graph::triangle_count() const {
    long long paths = 0; // ordered closed 3-walks / 6 = triangles
    for (int u = 0; u < n_; ++u) {
        std::uint64_t nu = rows_[u];
        std::uint64_t rest = nu;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (v > u) break;
            paths += std::popcount(nu & rows_[v]); // common neighbors of edge uv
        }
    }
    // each triangle counted once per edge pair with u > v: 3 times total
    return paths / 3;
}

Graph Graph::complement() const {
    Graph g(n_);
    std::uint64_t all = vertex_mask();
    for (int i = 0; i < n_; ++i)
        g.rows_[i] = (~rows_[i] & all) & ~(std::uint64_t{1} << i);
    return g;
}

Graph Graph::disjoint_union(const Graph& h) const {
    int n = n_ + h.n_;
    check_order(n);
    Graph g(n);
    for (int i = 0; i < n_; ++i) g.rows_[i] = rows_[i];
    for (int i = 0; i < h.n_; ++i) g.rows_[n_ + i] = h.rows_[i] << n_;
    return g;
}

Graph Graph::join(const Graph& h) const {
    Graph g = disjoint_union(h);
    std::uint64_t left = vertex_mask();
    std::uint64_t right = g.vertex_mask() & ~left;
    for (int i = 0; i < n_; ++i) g.rows_[i] |= right;
    for (int i = n_; i < g.n_; ++i) g.rows_[i] |= left;
    return g;
}

Graph Graph::induced(std::uint64_t keep) const {
    keep &= vertex_mask();
    int k = std::popcount(keep);
    check_order(k);
    std::array<int, kMaxOrder> map{};
    int idx = 0;
    for (int v = 0; v < n_; ++v)
        if ((keep >> v) & 1u) map[v] = idx++;
    Graph g(k);
    for (int v = 0; v < n_; ++v) {
        if (!((keep >> v) & 1u)) continue;
        std::uint64_t nb = rows_[v] & keep;
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            g.rows_[map[v]] |= std::uint64_t{1} << map[w];
        }
    }
    return g;
}

Graph Graph::without_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw precondition_error("vertex out of range");
    if (n_ == 1)
        throw precondition_error("cannot delete the only vertex");
    return induced(vertex_mask() & ~(std::uint64_t{1} << v));
}

Graph Graph::permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw precondition_error("permutation length mismatch");
    Graph g(n_);
    for (int v = 0; v < n_; ++v) {
        std::uint64_t nb = rows_[v];
        std::uint64_t out = 0;
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            out |= std::uint64_t{1} << perm[w];
        }
        g.rows_[perm[v]] = out;
    }
    return g;
}

bool Graph::operator==(const Graph& o) const {
    if (n_ != o.n_) return false;
    for (int i = 0; i < n_; ++i)
        if (rows_[i] != o.rows_[i]) return false;
    return true;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.degree_multiset = g.degrees();
    std::sort(p.degree_multiset.begin(), p.degree_multiset.end());
    p.min_degree = p.degree_multiset.front();
    p.max_degree = p.degree_multiset.back();
    p.regular = p.min_degree == p.max_degree;
    int distinct = 1;
    for (std::size_t i = 1; i < p.degree_multiset.size(); ++i)
        if (p.degree_multiset[i] != p.degree_multiset[i - 1]) ++distinct;
    p.biregular = distinct == 2 && p.min_degree > 0;
    return p;
}

namespace {

// Component masks by repeated neighborhood closure.
std::vector<std::uint64_t> components(const Graph& g) {
    std::vector<std::uint64_t> comps;
    std::uint64_t seen = 0;
    std::uint64_t all = g.vertex_mask();
    while (seen != all) {
        std::uint64_t frontier = std::uint64_t{1} << std::countr_zero(~seen & all);
        std::uint64_t comp = 0;
        while (frontier) {
            comp |= frontier;
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbors(v);
            }
            frontier = next & ~comp;
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;
}

} // namespace

bool is_connected(const Graph& g) { return components(g).size() == 1; }

bool is_bipartite(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            std::uint64_t nb = g.neighbors(v);
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_complete_bipartite(const Graph& g) {
    StructuralProbe p = structural_probe(g);
    return p.complete_multipartite_plus_isolated && p.isolated_count == 0 &&
           p.part_sizes.size() == 2;
}

StructuralProbe structural_probe(const Graph& g) {
    StructuralProbe p;
    int n = g.order();
    auto comps = components(g);
    p.connected = comps.size() == 1;
    p.bipartite = is_bipartite(g);
    p.is_join = n >= 2 && components(g.complement()).size() > 1;

    if (p.connected) {
        // all-pairs BFS; n <= 64 keeps this trivial
        int diam = 0;
        for (int s = 0; s < n; ++s) {
            std::uint64_t reached = std::uint64_t{1} << s;
            std::uint64_t frontier = reached;
            int depth = 0;
            while (reached != g.vertex_mask()) {
                std::uint64_t next = 0;
                std::uint64_t f = frontier;
                while (f) {
                    int v = std::countr_zero(f);
                    f &= f - 1;
                    next |= g.neighbors(v);
                }
                frontier = next & ~reached;
                reached |= frontier;
                ++depth;
            }
            diam = std::max(diam, depth);
        }
        p.diameter = diam;
    }

    // Complete multipartite + isolated vertices: strip isolated vertices,
    // then vertices partition into parts with identical neighborhoods and
    // all edges across parts.  An empty remainder does not qualify (no
    // part structure, and no positive eigenvalue to match).
    std::uint64_t isolated = 0;
    for (int v = 0; v < n; ++v)
        if (g.neighbors(v) == 0) isolated |= std::uint64_t{1} << v;
    p.isolated_count = std::popcount(isolated);
    std::uint64_t rest = g.vertex_mask() & ~isolated;
    if (rest != 0) {
        Graph h = g.induced(rest);
        int k = h.order();
        std::vector<int> part(k, -1);
        std::vector<std::uint64_t> part_nbr;
        bool ok = true;
        for (int v = 0; v < k && ok; ++v) {
            for (std::size_t c = 0; c < part_nbr.size(); ++c) {
                if (h.neighbors(v) == part_nbr[c]) {
                    part[v] = static_cast<int>(c);
                    break;
                }
            }
            if (part[v] == -1) {
                part[v] = static_cast<int>(part_nbr.size());
                part_nbr.push_back(h.neighbors(v));
            }
        }
        // class structure must be: same part <=> non-adjacent
        for (int u = 0; u < k && ok; ++u)
            for (int v = u + 1; v < k && ok; ++v)
                if (h.adjacent(u, v) == (part[u] == part[v])) ok = false;
        if (ok && part_nbr.size() >= 2) {
            p.complete_multipartite_plus_isolated = true;
            p.part_sizes.assign(part_nbr.size(), 0);
            for (int v = 0; v < k; ++v) ++p.part_sizes[part[v]];
            std::sort(p.part_sizes.begin(), p.part_sizes.end());
        }
    }
    return p;
}

} // namespace sg
