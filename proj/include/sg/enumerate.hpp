#ifndef SG_ENUMERATE_HPP
#define SG_ENUMERATE_HPP

#include <functional>
#include <optional>

#include "sg/graph.hpp"

namespace sg {

/// Filters for isomorph-free generation.  The edge and degree filters are
/// applied during augmentation (they are monotone along the construction
/// tree); connectivity, exact edge count, triangle count and minimum
/// degree are applied at the final order only, so no qualifying graph is
/// ever skipped.
struct EnumerationSpec {
    int order = 1;
    bool connected_only = false;
    std::optional<long long> edge_count;
    std::optional<long long> triangle_count;
    std::optional<int> max_degree;
    std::optional<int> min_degree;
};

inline constexpr int kEnumerationCap = 10;

/// Exactly one canonically labeled representative per isomorphism class
/// satisfying the filters, in a deterministic order.  Generation is by
/// vertex augmentation with canonical-deletion rejection: a child is kept
/// when deleting its canonically-last vertex recovers the parent class,
/// and duplicates arising from one parent are removed by canonical key.
void enumerate_graphs(const EnumerationSpec& spec,
                      const std::function<void(const Graph&)>& cb);

/// Parallel variant: the final augmentation level is partitioned into
/// deterministic parent chunks processed by `workers` threads; cb must be
/// thread-safe and the overall call order is unspecified.  Downstream
/// consumers sort their results, so output stays worker-count independent.
void enumerate_graphs_parallel(const EnumerationSpec& spec, int workers,
                               const std::function<void(const Graph&)>& cb);

/// Worker count from SPECGRAPH_WORKERS, else hardware concurrency.
int default_worker_count();

/// Number of isomorphism classes at this order under the filters.
long long count_graphs(const EnumerationSpec& spec);

} // namespace sg

#endif
