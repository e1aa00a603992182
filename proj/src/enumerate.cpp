#include "sg/enumerate.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <thread>
#include <vector>

#include "sg/canonical.hpp"

namespace sg {

namespace {

// Stored level entries are canonical representatives of order <= 10, so
// their upper triangles (<= 45 bits) fit a word.
void unpack_rows(int n, std::uint64_t bits, std::uint64_t* rows) {
    for (int i = 0; i < n; ++i) rows[i] = 0;
    int b = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++b)
            if ((bits >> b) & 1u) {
                rows[i] |= std::uint64_t{1} << j;
                rows[j] |= std::uint64_t{1} << i;
            }
}

long long pairs(long long k) { return k * (k - 1) / 2; }

struct Limits {
    long long edge_target = -1; // -1: no filter
    int max_degree = -1;
};

// Safe-to-recurse test for a partially built graph of order k (final n).
bool edge_reach_ok(const Limits& lim, int k, int n, long long m) {
    if (lim.edge_target < 0) return true;
    if (m > lim.edge_target) return false;
    return m + (pairs(n) - pairs(k)) >= lim.edge_target;
}

// Children of one canonical parent at order k-1, emitted as packed
// canonical bits of order k.
void expand_parent(std::uint64_t parent_bits, int k, int n, const Limits& lim,
                   std::vector<std::uint64_t>& out) {
    std::uint64_t parent_rows[16];
    unpack_rows(k - 1, parent_bits, parent_rows);
    long long parent_m = std::popcount(parent_bits);

    std::uint64_t allowed = (std::uint64_t{1} << (k - 1)) - 1;
    if (lim.max_degree >= 0) {
        for (int v = 0; v < k - 1; ++v)
            if (std::popcount(parent_rows[v]) >= lim.max_degree)
                allowed &= ~(std::uint64_t{1} << v);
    }

    out.clear();
    std::uint64_t child_rows[16];
    std::uint64_t deleted_rows[16];
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
        if (mask & ~allowed) continue;
        int added = std::popcount(mask);
        if (lim.max_degree >= 0 && added > lim.max_degree) continue;
        if (!edge_reach_ok(lim, k, n, parent_m + added)) continue;

        for (int i = 0; i < k - 1; ++i)
            child_rows[i] = parent_rows[i] | (((mask >> i) & 1u) << (k - 1));
        child_rows[k - 1] = mask;

        auto cf = detail::canonical_small(k, child_rows);

        // canonical-deletion test: removing the canonically-last vertex
        // must recover this parent, otherwise another parent owns the child
        if (k > 2) {
            int w = cf.last_vertex;
            int idx = 0;
            std::uint64_t keep = ~(std::uint64_t{1} << w);
            for (int v = 0; v < k; ++v) {
                if (v == w) continue;
                std::uint64_t nb = child_rows[v] & keep;
                // compress out bit w
                std::uint64_t low = nb & ((std::uint64_t{1} << w) - 1);
                std::uint64_t high = nb >> (w + 1);
                deleted_rows[idx++] = low | (high << w);
            }
            if (detail::canonical_small(k - 1, deleted_rows).key != parent_bits)
                continue;
        }

        bool dup = false;
        for (std::uint64_t seen : out)
            if (seen == cf.key) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(cf.key);
    }
}

bool final_filters_ok(const EnumerationSpec& spec, const Graph& g) {
    if (spec.edge_count && g.edge_count() != *spec.edge_count) return false;
    if (spec.min_degree && g.min_degree() < *spec.min_degree) return false;
    if (spec.max_degree && g.max_degree() > *spec.max_degree) return false;
    if (spec.triangle_count && g.triangle_count() != *spec.triangle_count) return false;
    if (spec.connected_only && !is_connected(g)) return false;
    return true;
}

Graph graph_from_bits(int n, std::uint64_t bits) {
    std::uint64_t rows[16];
    unpack_rows(n, bits, rows);
    return Graph::from_rows(n, std::span<const std::uint64_t>(rows, static_cast<std::size_t>(n)));
}

// Canonical representatives of every order <= level, honoring the
// tree-safe filters only.
std::vector<std::uint64_t> build_level(int level, int final_order, const Limits& lim) {
    std::vector<std::uint64_t> current{0}; // K_1
    std::vector<std::uint64_t> children;
    std::vector<std::uint64_t> next;
    for (int k = 2; k <= level; ++k) {
        next.clear();
        for (std::uint64_t p : current) {
            expand_parent(p, k, final_order, lim, children);
            next.insert(next.end(), children.begin(), children.end());
        }
        current.swap(next);
    }
    return current;
}

Limits limits_of(const EnumerationSpec& spec) {
    Limits lim;
    if (spec.edge_count) lim.edge_target = *spec.edge_count;
    if (spec.max_degree) lim.max_degree = *spec.max_degree;
    return lim;
}

void check_spec(const EnumerationSpec& spec) {
    if (spec.order < 1)
        throw precondition_error("enumeration order must be >= 1");
    if (spec.order > kEnumerationCap)
        throw capacity_error("enumeration capped at order " +
                             std::to_string(kEnumerationCap));
}

} // namespace

void enumerate_graphs(const EnumerationSpec& spec,
                      const std::function<void(const Graph&)>& cb) {
    check_spec(spec);
    Limits lim = limits_of(spec);
    if (spec.order == 1) {
        Graph g(1);
        if (final_filters_ok(spec, g)) cb(g);
        return;
    }
    auto parents = build_level(spec.order - 1, spec.order, lim);
    std::vector<std::uint64_t> children;
    for (std::uint64_t p : parents) {
        expand_parent(p, spec.order, spec.order, lim, children);
        for (std::uint64_t bits : children) {
            Graph g = graph_from_bits(spec.order, bits);
            if (final_filters_ok(spec, g)) cb(g);
        }
    }
}

void enumerate_graphs_parallel(const EnumerationSpec& spec, int workers,
                               const std::function<void(const Graph&)>& cb) {
    check_spec(spec);
    if (workers <= 0) workers = default_worker_count();
    if (spec.order == 1 || workers == 1) {
        enumerate_graphs(spec, cb);
        return;
    }
    Limits lim = limits_of(spec);
    auto parents = build_level(spec.order - 1, spec.order, lim);
    std::atomic<std::size_t> cursor{0};
    constexpr std::size_t kChunk = 64;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            std::vector<std::uint64_t> children;
            while (true) {
                std::size_t begin = cursor.fetch_add(kChunk);
                if (begin >= parents.size()) break;
                std::size_t end = std::min(parents.size(), begin + kChunk);
                for (std::size_t i = begin; i < end; ++i) {
                    expand_parent(parents[i], spec.order, spec.order, lim, children);
                    for (std::uint64_t bits : children) {
                        Graph g = graph_from_bits(spec.order, bits);
                        if (final_filters_ok(spec, g)) cb(g);
                    }
                }
            }
        });
    }
    for (auto& t : pool) t.join();
}

int default_worker_count() {
    if (const char* env = std::getenv("SPECGRAPH_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

long long count_graphs(const EnumerationSpec& spec) {
    std::atomic<long long> count{0};
    enumerate_graphs_parallel(spec, 0, [&](const Graph&) { ++count; });
    return count.load();
}

} // namespace sg
