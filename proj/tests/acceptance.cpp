// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sg/canonical.hpp"
#include "sg/dsverify.hpp"
#include "sg/expr.hpp"
#include "sg/graph6.hpp"
#include "sg/numeric.hpp"
#include "sg/spectrum.hpp"
#include "sg/theorems.hpp"

using namespace sg;

namespace {

std::vector<MulticoneParams> multicones_up_to(int order_cap) {
    std::vector<MulticoneParams> out;
    for (int r = 1; r <= order_cap; ++r)
        for (int s = 1; s <= order_cap; ++s)
            for (int t = 1; t <= order_cap; ++t)
                if (r + s * t <= order_cap) out.push_back({r, s, t});
    return out;
}

struct PoolGraph {
    std::string name;
    Graph graph;
    int degree; // regularity
    Spectrum adjacency;          // exact, when quadratic-irrational
    bool adjacency_exact = false;
    Spectrum laplacian;
    bool laplacian_exact = false;
};

Spectrum spec_of(std::vector<std::pair<QuadIrr, int>> raw) {
    std::vector<SpectrumEntry> entries;
    for (auto& [v, m] : raw) entries.push_back({v, m});
    return Spectrum(std::move(entries));
}

// Exact spectra of the regular pool families.  C_7 adjacency/Laplacian
// eigenvalues are cubic irrationals, so those stay polynomial-only.
std::vector<PoolGraph> regular_pool() {
    std::vector<PoolGraph> pool;
    auto add = [&](std::string name, Graph g, int degree, Spectrum adj, bool has_adj,
                   Spectrum lap, bool has_lap) {
        PoolGraph p{std::move(name), std::move(g), degree, std::move(adj), has_adj,
                    std::move(lap), has_lap};
        pool.push_back(std::move(p));
    };
    for (int a = 1; a <= 6; ++a) {
        add("K" + std::to_string(a), make_complete(a), a - 1,
            spec_of({{QuadIrr::integer(a - 1), 1}, {QuadIrr::integer(-1), a - 1}}), true,
            spec_of({{QuadIrr::integer(a), a - 1}, {QuadIrr::integer(0), 1}}), true);
    }
    for (int a = 3; a <= 7; ++a) {
        Spectrum adj, lap;
        bool exact = true;
        switch (a) {
            case 3:
                adj = spec_of({{QuadIrr::integer(2), 1}, {QuadIrr::integer(-1), 2}});
                lap = spec_of({{QuadIrr::integer(3), 2}, {QuadIrr::integer(0), 1}});
                break;
            case 4:
                adj = spec_of({{QuadIrr::integer(2), 1},
                               {QuadIrr::integer(0), 2},
                               {QuadIrr::integer(-2), 1}});
                lap = spec_of({{QuadIrr::integer(4), 1},
                               {QuadIrr::integer(2), 2},
                               {QuadIrr::integer(0), 1}});
                break;
            case 5:
                adj = spec_of({{QuadIrr::integer(2), 1},
                               {QuadIrr::surd(-1, 1, 5, 2), 2},
                               {QuadIrr::surd(-1, -1, 5, 2), 2}});
                lap = spec_of({{QuadIrr::surd(5, 1, 5, 2), 2},
                               {QuadIrr::surd(5, -1, 5, 2), 2},
                               {QuadIrr::integer(0), 1}});
                break;
            case 6:
                adj = spec_of({{QuadIrr::integer(2), 1},
                               {QuadIrr::integer(1), 2},
                               {QuadIrr::integer(-1), 2},
                               {QuadIrr::integer(-2), 1}});
                lap = spec_of({{QuadIrr::integer(4), 1},
                               {QuadIrr::integer(3), 2},
                               {QuadIrr::integer(1), 2},
                               {QuadIrr::integer(0), 1}});
                break;
            default:
                exact = false;
                break;
        }
        add("C" + std::to_string(a), make_cycle(a), 2, adj, exact, lap, exact);
    }
    for (int a = 1; a <= 5; ++a) {
        add(std::to_string(a) + "K1", Graph(a), 0,
            spec_of({{QuadIrr::integer(0), a}}), true,
            spec_of({{QuadIrr::integer(0), a}}), true);
    }
    for (int a = 1; a <= 3; ++a) {
        add("K" + std::to_string(a) + "," + std::to_string(a),
            make_complete_multipartite({a, a}), a,
            spec_of({{QuadIrr::integer(a), 1},
                     {QuadIrr::integer(0), 2 * a - 2},
                     {QuadIrr::integer(-a), 1}}),
            true,
            spec_of({{QuadIrr::integer(2 * a), 1},
                     {QuadIrr::integer(a), 2 * a - 2},
                     {QuadIrr::integer(0), 1}}),
            true);
    }
    for (int s = 1; s <= 8; ++s) {
        for (int t = 1; s * t <= 8; ++t) {
            Graph g = make_complete(t);
            for (int i = 1; i < s; ++i) g = g.disjoint_union(make_complete(t));
            add(std::to_string(s) + "K" + std::to_string(t), g, t - 1,
                spec_of({{QuadIrr::integer(t - 1), s},
                         {QuadIrr::integer(-1), s * (t - 1)}}),
                true,
                spec_of({{QuadIrr::integer(t), s * (t - 1)}, {QuadIrr::integer(0), s}}),
                true);
        }
    }
    return pool;
}

bool criterion1(std::string& detail) {
    int checked = 0;
    for (const auto& mp : multicones_up_to(12)) {
        Graph g = build_multicone(mp);
        if (spectrum_to_poly(multicone_adjacency_spectrum(mp)) !=
            char_poly(g, MatrixKind::Adjacency)) {
            detail = "mismatch at (" + std::to_string(mp.r) + "," + std::to_string(mp.s) +
                     "," + std::to_string(mp.t) + ")";
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " multicones, exact equality";
    return true;
}

bool criterion2(std::string& detail) {
    int checked = 0;
    for (const auto& mp : multicones_up_to(12)) {
        Graph g = build_multicone(mp);
        if (spectrum_to_poly(multicone_laplacian_spectrum(mp)) !=
            char_poly(g, MatrixKind::Laplacian)) {
            detail = "mismatch at (" + std::to_string(mp.r) + "," + std::to_string(mp.s) +
                     "," + std::to_string(mp.t) + ")";
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " multicones, exact equality";
    return true;
}

bool criterion3(std::string& detail) {
    auto pool = regular_pool();
    long long checked = 0;
    for (const auto& a : pool) {
        for (const auto& b : pool) {
            if (a.graph.order() + b.graph.order() > 14) continue;
            IntPoly joined = join_char_poly(
                char_poly(a.graph, MatrixKind::Adjacency), a.graph.order(), a.degree,
                char_poly(b.graph, MatrixKind::Adjacency), b.graph.order(), b.degree);
            if (joined != char_poly(a.graph.join(b.graph), MatrixKind::Adjacency)) {
                detail = "mismatch at " + a.name + " v " + b.name;
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " ordered pairs, exact equality";
    return true;
}

bool criterion4(std::string& detail) {
    auto pool = regular_pool();
    long long spectrum_checks = 0, poly_checks = 0;
    for (const auto& p : pool) {
        int n = p.graph.order();
        IntPoly adj = char_poly(p.graph, MatrixKind::Adjacency);
        IntPoly adj_comp = char_poly(p.graph.complement(), MatrixKind::Adjacency);
        // adjacency transform, spectrum level where representable
        if (p.adjacency_exact) {
            Spectrum mapped = complement_spectrum_regular(p.adjacency, n, p.degree);
            if (spectrum_to_poly(mapped) != adj_comp) {
                detail = "adjacency spectrum map failed for " + p.name;
                return false;
            }
            Spectrum back = complement_spectrum_regular(mapped, n, n - 1 - p.degree);
            if (back != p.adjacency) {
                detail = "adjacency involution failed for " + p.name;
                return false;
            }
            ++spectrum_checks;
        }
        // polynomial route covers every pool graph, C_7 included
        if (complement_char_poly_regular(adj, n, p.degree) != adj_comp) {
            detail = "adjacency polynomial map failed for " + p.name;
            return false;
        }
        if (complement_char_poly_regular(adj_comp, n, n - 1 - p.degree) != adj) {
            detail = "adjacency polynomial involution failed for " + p.name;
            return false;
        }
        // Laplacian transform
        IntPoly lap = char_poly(p.graph, MatrixKind::Laplacian);
        IntPoly lap_comp = char_poly(p.graph.complement(), MatrixKind::Laplacian);
        if (p.laplacian_exact) {
            Spectrum mapped = laplacian_complement_spectrum(p.laplacian, n);
            if (spectrum_to_poly(mapped) != lap_comp) {
                detail = "Laplacian spectrum map failed for " + p.name;
                return false;
            }
            if (laplacian_complement_spectrum(mapped, n) != p.laplacian) {
                detail = "Laplacian involution failed for " + p.name;
                return false;
            }
            ++spectrum_checks;
        }
        if (laplacian_complement_char_poly(lap, n) != lap_comp) {
            detail = "Laplacian polynomial map failed for " + p.name;
            return false;
        }
        if (laplacian_complement_char_poly(lap_comp, n) != lap) {
            detail = "Laplacian polynomial involution failed for " + p.name;
            return false;
        }
        poly_checks += 4;
    }
    detail = std::to_string(spectrum_checks) + " spectrum-level and " +
             std::to_string(poly_checks) + " polynomial-level checks, exact";
    return true;
}

bool family_criterion(MatrixKind kind, std::string& detail) {
    auto checks = verify_multicone_family(9, 9, 9, 9, kind);
    std::set<std::string> names;
    for (const auto& check : checks) {
        std::string name = "(" + std::to_string(check.params.r) + "," +
                           std::to_string(check.params.s) + "," +
                           std::to_string(check.params.t) + ")";
        if (!check.report.determined) {
            detail = "mate found for " + name;
            return false;
        }
        if (!check.degree_profile_ok) {
            detail = "degree profile mismatch for " + name;
            return false;
        }
        names.insert(name);
    }
    for (const char* wanted : {"(1,2,2)", "(2,2,2)", "(1,3,2)", "(1,2,3)", "(3,2,2)",
                               "(2,3,2)", "(1,4,2)"}) {
        if (!names.count(wanted)) {
            detail = std::string("family sweep missed ") + wanted;
            return false;
        }
    }
    detail = std::to_string(checks.size()) + " multicones determined";
    return true;
}

bool criterion5(std::string& detail) { return family_criterion(MatrixKind::Adjacency, detail); }

bool criterion6(std::string& detail) { return family_criterion(MatrixKind::Laplacian, detail); }

bool criterion7(std::string& detail) {
    CensusReport census = cospectral_census(5, MatrixKind::Adjacency);
    if (census.nontrivial.size() != 1) {
        detail = "expected exactly one nontrivial class at order 5";
        return false;
    }
    const auto& cls = census.nontrivial.front();
    std::set<std::string> members(cls.members.begin(), cls.members.end());
    std::set<std::string> expected = {
        canonical_key(make_cycle(4).disjoint_union(Graph(1))),
        canonical_key(make_complete_multipartite({1, 4}))};
    if (members != expected) {
        detail = "order-5 class is not {C4+K1, K_{1,4}}";
        return false;
    }
    for (int n = 1; n <= 4; ++n) {
        if (!cospectral_census(n, MatrixKind::Adjacency).nontrivial.empty()) {
            detail = "unexpected cospectral class at order " + std::to_string(n);
            return false;
        }
    }
    detail = "orders 1-4 clean; order 5 has exactly the classic pair";
    return true;
}

bool criterion8(std::string& detail) {
    // (i) r=1, t=2
    auto first = complement_mate_bipartite(1, 2);
    if (!first || *first != std::pair<long long, long long>{1, 4}) {
        detail = "(1,2) did not produce (1,4)";
        return false;
    }
    IntPoly star = char_poly(make_complete_multipartite({1, 4}), MatrixKind::Adjacency);
    IntPoly f2c = char_poly(make_friendship(2).complement(), MatrixKind::Adjacency);
    if (star != f2c) {
        detail = "K_{1,4} polynomial differs from complement of F_2";
        return false;
    }
    // (ii) r=2, t=4: order 10, direct polynomials only
    auto second = complement_mate_bipartite(2, 4);
    if (!second || *second != std::pair<long long, long long>{2, 8}) {
        detail = "(2,4) did not produce (2,8)";
        return false;
    }
    IntPoly k28 = char_poly(make_complete_multipartite({2, 8}), MatrixKind::Adjacency);
    Graph other = Graph(2).disjoint_union(make_complete_multipartite({4, 4}));
    if (k28 != char_poly(other, MatrixKind::Adjacency)) {
        detail = "K_{2,8} polynomial differs from 2K_1 + K_{4,4}";
        return false;
    }
    // (iii) s >= 3: complements are determined, unrestricted search
    int searched = 0;
    for (const auto& mp : multicones_up_to(9)) {
        if (mp.s < 3) continue;
        DSReport report =
            verify_ds(build_multicone(mp).complement(), MatrixKind::Adjacency, false);
        if (!report.determined) {
            detail = "complement of (" + std::to_string(mp.r) + "," +
                     std::to_string(mp.s) + "," + std::to_string(mp.t) +
                     ") has a mate";
            return false;
        }
        ++searched;
    }
    detail = "both mate constructions verified; " + std::to_string(searched) +
             " complements (s >= 3) determined";
    return true;
}

bool criterion9(std::string& detail) {
    long long total = 0;
    for (int n = 1; n <= 7; ++n) {
        SweepSummary s = theorem_sweep(n);
        total += s.graphs;
        if (s.violations != 0) {
            detail = std::to_string(s.violations) + " violations at order " +
                     std::to_string(n);
            return false;
        }
    }
    detail = std::to_string(total) + " graphs swept, zero violations";
    return true;
}

std::uint64_t g_seed = 20250801; // fixed default; override with --seed

bool criterion10(std::string& detail) {
    std::mt19937_64 rng(g_seed);
    double worst = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7); // orders 2..8
        Graph g = [&] {
            for (;;) {
                std::bernoulli_distribution coin(0.5);
                std::vector<std::pair<int, int>> edges;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (coin(rng)) edges.emplace_back(i, j);
                Graph candidate = Graph::from_edges(n, edges);
                if (is_connected(candidate)) return candidate;
            }
        }();
        std::vector<double> xs = {n + 1.0, n + 3.0, 2.0 * n};
        for (int j = 0; j < n; ++j) {
            double residual = vertex_deleted_identity_residual(g, j, xs);
            worst = std::max(worst, residual);
            if (residual >= 1e-6) {
                std::ostringstream msg;
                msg << "residual " << residual << " at trial " << trial << ", vertex "
                    << j;
                detail = msg.str();
                return false;
            }
        }
    }
    std::ostringstream msg;
    msg << "200 graphs, worst residual " << worst;
    detail = msg.str();
    return true;
}

bool criterion11(std::string& detail) {
    long long checked = 0;
    for (int n = 1; n <= 7; ++n) {
        EnumerationSpec spec;
        spec.order = n;
        bool ok = true;
        std::string local;
        enumerate_graphs(spec, [&](const Graph& g) {
            if (!ok) return;
            auto ps = power_sums(char_poly(g, MatrixKind::Adjacency), 8);
            for (int k = 1; k <= 8; ++k) {
                BigInt direct = [&] {
                    // direct big-integer trace of A^k
                    int order_ = g.order();
                    std::vector<BigInt> m(static_cast<std::size_t>(order_) * order_,
                                          BigInt(0));
                    for (int i = 0; i < order_; ++i)
                        for (int j = 0; j < order_; ++j)
                            if (g.adjacent(i, j))
                                m[static_cast<std::size_t>(i) * order_ + j] = 1;
                    std::vector<BigInt> p = m;
                    for (int step = 1; step < k; ++step) {
                        std::vector<BigInt> next(
                            static_cast<std::size_t>(order_) * order_, BigInt(0));
                        for (int i = 0; i < order_; ++i)
                            for (int l = 0; l < order_; ++l) {
                                if (p[static_cast<std::size_t>(i) * order_ + l] == 0)
                                    continue;
                                for (int j = 0; j < order_; ++j)
                                    next[static_cast<std::size_t>(i) * order_ + j] +=
                                        p[static_cast<std::size_t>(i) * order_ + l] *
                                        m[static_cast<std::size_t>(l) * order_ + j];
                            }
                        p = std::move(next);
                    }
                    BigInt tr = 0;
                    for (int i = 0; i < order_; ++i)
                        tr += p[static_cast<std::size_t>(i) * order_ + i];
                    return tr;
                }();
                if (ps[static_cast<std::size_t>(k - 1)] != direct) {
                    local = "walk count mismatch, order " + std::to_string(n);
                    ok = false;
                    return;
                }
            }
            ++checked;
        });
        if (!ok) {
            detail = local;
            return false;
        }
    }
    detail = std::to_string(checked) + " graphs, k <= 8, exact";
    return true;
}

bool criterion12(std::string& detail) {
    int checked = 0;
    for (const auto& mp : multicones_up_to(12)) {
        if (mp.s < 2) continue;
        IntPoly p = char_poly(build_multicone(mp), MatrixKind::Adjacency);
        auto counts =
            infer_bidegreed_counts(p, mp.r + mp.s * mp.t - 1, mp.r + mp.t - 1);
        if (counts.first != mp.r || counts.second != mp.s * mp.t) {
            detail = "wrong counts at (" + std::to_string(mp.r) + "," +
                     std::to_string(mp.s) + "," + std::to_string(mp.t) + ")";
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " multicones (s >= 2), exact counts";
    return true;
}

bool criterion13(std::string& detail) {
    for (int r = 2; r <= 6; ++r) {
        Graph a = Graph(3).join(make_complete(r));
        Graph b = make_complete(3).disjoint_union(Graph(1)).join(make_complete(r - 1));
        if (char_poly(a, MatrixKind::Signless) != char_poly(b, MatrixKind::Signless)) {
            detail = "signless polynomials differ at r = " + std::to_string(r);
            return false;
        }
        if (is_isomorphic(a, b)) {
            detail = "pair unexpectedly isomorphic at r = " + std::to_string(r);
            return false;
        }
    }
    detail = "r = 2..6 signless-cospectral and non-isomorphic";
    return true;
}

bool criterion14(std::string& detail) {
    // Exploratory only: desk scale cannot reach the order-33 friendship
    // exception, so the signless censuses are reported, not asserted.
    std::ostringstream report;
    for (int n = 5; n <= 8; ++n) {
        CensusReport census = cospectral_census(n, MatrixKind::Signless);
        long long multicone_classes = 0;
        for (const auto& cls : census.nontrivial) {
            bool has_multicone = false;
            for (const auto& member : cls.members) {
                Graph g = graph6_decode(member);
                for (const auto& mp : multicones_up_to(n)) {
                    if (mp.order() != n) continue;
                    if (is_isomorphic(g, build_multicone(mp))) has_multicone = true;
                }
            }
            if (has_multicone) ++multicone_classes;
        }
        report << "n=" << n << ": " << census.nontrivial.size() << " Q-cospectral classes ("
               << multicone_classes << " with a multicone); ";
    }
    std::printf("    [info] signless census: %s\n", report.str().c_str());
    std::printf("    [info] order-33 friendship exception and all-order claims are out "
                "of desk-scale reach; bounded suites above are the coverage\n");
    detail = "exploratory signless census reported (not asserted)";
    return true;
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--seed") g_seed = std::strtoull(argv[i + 1], nullptr, 10);
    struct Criterion {
        int id;
        const char* label;
        std::function<bool(std::string&)> run;
    };
    std::vector<Criterion> criteria = {
        {1, "closed-form vs direct adjacency polynomials, r+st <= 12", criterion1},
        {2, "closed-form vs direct Laplacian polynomials, r+st <= 12", criterion2},
        {3, "join polynomial formula over the regular pool", criterion3},
        {4, "complement transforms, adjacency and Laplacian", criterion4},
        {5, "adjacency determination of multicones through order 9", criterion5},
        {6, "Laplacian determination of multicones through order 9", criterion6},
        {7, "smallest cospectral pair appears exactly at order 5", criterion7},
        {8, "complement constructions: bipartite mates and s >= 3", criterion8},
        {9, "theorem sweeps over all graphs of order <= 7", criterion9},
        {10, "vertex-deleted identity residual < 1e-6 on 200 seeded graphs", criterion10},
        {11, "walk counts equal matrix-power traces, order <= 7, k <= 8", criterion11},
        {12, "bidegreed count inference on multicone polynomials", criterion12},
        {13, "signless-cospectral non-isomorphic pairs, r = 2..6", criterion13},
        {14, "desk-scale limits: exploratory signless census only", criterion14},
    };

    int failures = 0;
    for (auto& criterion : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] criterion %2d (%6.2fs): %s — %s\n", ok ? "PASS" : "FAIL",
                    criterion.id, secs, criterion.label, detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures == 0)
        std::printf("all %zu criteria passed\n", criteria.size());
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures;
}
