#include "sg/dsverify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <mutex>

#include "sg/canonical.hpp"
#include "sg/graph6.hpp"

namespace sg {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::atomic<bool> g_progress{false};

// One stderr line every 2^16 graphs; cheap enough to leave in the search path.
struct ProgressMeter {
    const char* label;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    std::atomic<long long> count{0};
    void tick() {
        long long c = ++count;
        if ((c & 0xffff) != 0 || !g_progress.load(std::memory_order_relaxed)) return;
        double dt = seconds_since(t0);
        std::fprintf(stderr, "[progress] %s: %lld graphs, %.0f graphs/s\n", label, c,
                     dt > 0 ? c / dt : 0.0);
    }
};

std::string poly_key(const IntPoly& p) {
    std::string key;
    for (const auto& c : p.coeffs()) {
        key += c.str();
        key += ",";
    }
    return key;
}

// Edge/triangle targets implied by the polynomial; empty result means no
// graph at all can match (non-integral implied count).
struct Prefilters {
    bool feasible = true;
    std::optional<long long> edges;
    std::optional<long long> triangles;
};

Prefilters prefilters_of(const IntPoly& target, int n, MatrixKind kind) {
    Prefilters f;
    if (kind == MatrixKind::Adjacency) {
        if (n >= 1 && target.coeff(n - 1) != 0) {
            f.feasible = false; // trace of an adjacency matrix is zero
            return f;
        }
        if (n >= 2) {
            BigInt m = -target.coeff(n - 2);
            if (m < 0 || m > BigInt(n) * (n - 1) / 2) {
                f.feasible = false;
                return f;
            }
            f.edges = m.convert_to<long long>();
        }
        if (n >= 3) {
            BigInt twice_tri = -target.coeff(n - 3);
            if (twice_tri < 0 || twice_tri % 2 != 0) {
                f.feasible = false;
                return f;
            }
            f.triangles = (twice_tri / 2).convert_to<long long>();
        }
    } else {
        // trace = 2m for both Laplacians
        BigInt trace = -target.coeff(n - 1);
        if (trace < 0 || trace % 2 != 0 || trace > BigInt(n) * (n - 1)) {
            f.feasible = false;
            return f;
        }
        f.edges = (trace / 2).convert_to<long long>();
    }
    return f;
}

} // namespace

void set_progress_logging(bool enabled) { g_progress.store(enabled); }

std::vector<Graph> find_cospectral_mates(const IntPoly& target, int n, MatrixKind kind,
                                         bool connected_only, bool use_prefilters) {
    if (target.degree() != n)
        throw precondition_error("target degree must equal the order searched");
    if (!target.monic())
        throw precondition_error("target polynomial must be monic");

    EnumerationSpec spec;
    spec.order = n;
    spec.connected_only = connected_only;
    if (use_prefilters) {
        Prefilters f = prefilters_of(target, n, kind);
        if (!f.feasible) return {};
        spec.edge_count = f.edges;
        spec.triangle_count = f.triangles;
    }

    std::mutex lock;
    std::vector<Graph> found;
    ProgressMeter meter{"mate search"};
    enumerate_graphs_parallel(spec, 0, [&](const Graph& g) {
        meter.tick();
        if (char_poly(g, kind) == target) {
            std::lock_guard<std::mutex> guard(lock);
            found.push_back(g);
        }
    });
    std::sort(found.begin(), found.end(), [](const Graph& a, const Graph& b) {
        return graph6_encode(a) < graph6_encode(b);
    });
    return found;
}

DSReport verify_ds(const Graph& g, MatrixKind kind, bool connected_only) {
    auto t0 = std::chrono::steady_clock::now();
    DSReport report;
    Graph canon = canonical_form(g).graph;
    report.target = graph6_encode(canon);
    report.kind = kind;
    report.order = g.order();
    report.connected_only = connected_only;

    IntPoly target = char_poly(g, kind);

    EnumerationSpec spec;
    spec.order = g.order();
    spec.connected_only = connected_only;
    Prefilters f = prefilters_of(target, g.order(), kind);
    spec.edge_count = f.edges;
    spec.triangle_count = f.triangles;

    std::mutex lock;
    long long enumerated = 0;
    std::vector<std::string> mates;
    ProgressMeter meter{"ds verification"};
    enumerate_graphs_parallel(spec, 0, [&](const Graph& h) {
        meter.tick();
        bool match = char_poly(h, kind) == target;
        std::lock_guard<std::mutex> guard(lock);
        ++enumerated;
        if (match) {
            std::string key = graph6_encode(h);
            if (key != report.target) mates.push_back(key);
        }
    });
    std::sort(mates.begin(), mates.end());
    report.enumerated = enumerated;
    report.mates = std::move(mates);
    report.determined = report.mates.empty();
    report.seconds = seconds_since(t0);
    return report;
}

CensusReport cospectral_census(int n, MatrixKind kind) {
    if (n > 9)
        throw capacity_error("census capped at order 9");
    auto t0 = std::chrono::steady_clock::now();

    EnumerationSpec spec;
    spec.order = n;
    std::mutex lock;
    std::map<std::string, std::pair<IntPoly, std::vector<std::string>>> classes;
    ProgressMeter meter{"census"};
    enumerate_graphs_parallel(spec, 0, [&](const Graph& g) {
        meter.tick();
        IntPoly p = char_poly(g, kind);
        std::string key = poly_key(p);
        std::string g6 = graph6_encode(g);
        std::lock_guard<std::mutex> guard(lock);
        auto& slot = classes[key];
        slot.first = p;
        slot.second.push_back(g6);
    });

    CensusReport report;
    report.order = n;
    report.kind = kind;
    long long total = 0;
    for (auto& [key, slot] : classes) {
        total += static_cast<long long>(slot.second.size());
        if (slot.second.size() < 2) continue;
        CospectralClass cls;
        cls.coeffs = slot.first.to_decimal();
        std::sort(slot.second.begin(), slot.second.end());
        cls.members = slot.second;
        report.nontrivial.push_back(std::move(cls));
        report.not_determined += static_cast<long long>(slot.second.size());
    }
    std::sort(report.nontrivial.begin(), report.nontrivial.end(),
              [](const CospectralClass& a, const CospectralClass& b) {
                  return a.members.front() < b.members.front();
              });
    report.total_classes = total;
    report.seconds = seconds_since(t0);
    return report;
}

std::vector<FamilyCheck> verify_multicone_family(int r_max, int s_max, int t_max,
                                                 int order_cap, MatrixKind kind) {
    if (order_cap > kEnumerationCap)
        throw capacity_error("order cap exceeds enumeration capacity");
    std::vector<FamilyCheck> out;
    for (int r = 1; r <= r_max; ++r) {
        for (int s = 1; s <= s_max; ++s) {
            for (int t = 1; t <= t_max; ++t) {
                MulticoneParams mp{r, s, t};
                if (mp.order() > order_cap) continue;
                Graph g = build_multicone(mp);
                FamilyCheck check;
                check.params = mp;
                check.report =
                    verify_ds(g, kind, /*connected_only=*/kind == MatrixKind::Adjacency);
                DegreeProfile prof = degree_profile(g);
                bool degrees_match = prof.min_degree == r + t - 1 &&
                                     prof.max_degree == r + s * t - 1;
                bool shape_ok = prof.regular ? s == 1 : prof.biregular;
                check.degree_profile_ok = degrees_match && shape_ok;
                out.push_back(std::move(check));
            }
        }
    }
    return out;
}

} // namespace sg
