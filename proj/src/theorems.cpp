#include "sg/theorems.hpp"

#include <cmath>
#include <mutex>

#include "sg/canonical.hpp"
#include "sg/enumerate.hpp"
#include "sg/graph6.hpp"

namespace sg {

QuadIrr spectral_radius_bound(int n, long long m, int min_degree) {
    long long d = min_degree;
    long long radicand = 8 * m - 4 * static_cast<long long>(n) * d + (d + 1) * (d + 1);
    if (radicand < 0)
        throw precondition_error("infeasible parameters: negative radicand");
    return QuadIrr::surd(d - 1, 1, radicand, 2);
}

BoundReport check_bound(const Graph& g, double tol) {
    if (!is_connected(g))
        throw precondition_error("bound check requires a connected graph");
    BoundReport report;
    DegreeProfile prof = degree_profile(g);
    report.bound = spectral_radius_bound(g.order(), g.edge_count(), prof.min_degree);
    report.rho = numeric_spectrum(g, MatrixKind::Adjacency, tol).front();
    long double bound_val = report.bound.to_long_double();
    report.bound_holds = report.rho <= static_cast<double>(bound_val) + tol;
    report.equality = std::fabs(static_cast<double>(bound_val) - report.rho) < tol;
    report.regular = prof.regular;
    report.biregular_with_max_degree =
        prof.biregular && prof.max_degree == g.order() - 1;
    return report;
}

bool regularity_from_spectrum(const Graph& g, double tol) {
    double rho = numeric_spectrum(g, MatrixKind::Adjacency, tol).front();
    double average = 2.0 * g.edge_count() / g.order();
    return std::fabs(rho - average) < tol;
}

OnePositiveReport one_positive_eigenvalue_check(const Graph& g) {
    OnePositiveReport report;
    report.spectral = count_positive_roots(char_poly(g, MatrixKind::Adjacency)) == 1;
    report.structural = structural_probe(g).complete_multipartite_plus_isolated;
    return report;
}

ThreeEigenvalueReport three_eigenvalue_check(const Graph& g, double tol) {
    ThreeEigenvalueReport report;
    DegreeProfile prof = degree_profile(g);
    // connectivity is part of the hypothesis: "diameter 2" presupposes it,
    // and K_2 + K_1 (nonregular, three eigenvalues) breaks both claims
    if (!is_connected(g)) return report;
    IntPoly p = char_poly(g, MatrixKind::Adjacency);
    if (prof.regular || count_distinct_roots(p) != 3) return report;
    report.applies = true;

    StructuralProbe probe = structural_probe(g);
    report.diameter_two = probe.diameter && *probe.diameter == 2;

    auto mu = main_angles(g, tol).eigenvalues; // three distinct, descending
    report.theta2 = mu[1];
    report.theta3 = mu[2];
    report.theta2_nonneg = report.theta2 >= -tol;
    bool theta2_zero = std::fabs(report.theta2) < tol;
    report.theta2_zero_iff_complete_bipartite =
        theta2_zero == is_complete_bipartite(g);
    return report;
}

JoinDetectReport join_detect_check(const Graph& g) {
    JoinDetectReport report;
    IntPoly lp = char_poly(g, MatrixKind::Laplacian);
    report.order_is_laplacian_eigenvalue = lp.evaluate(BigInt(g.order())) == 0;
    report.complement_disconnected = structural_probe(g).is_join;
    return report;
}

BipartiteEquivalences bipartite_equivalences(const Graph& g, double tol) {
    BipartiteEquivalences eq;
    eq.connected = is_connected(g);
    eq.structural = is_bipartite(g);

    int n = g.order();
    IntPoly p = char_poly(g, MatrixKind::Adjacency);
    eq.coefficients = true;
    for (int k = 1; k <= n; k += 2)
        if (p.coeff(n - k) != 0) eq.coefficients = false;

    auto vals = numeric_spectrum(g, MatrixKind::Adjacency, tol);
    eq.symmetric_spectrum = true;
    for (int i = 0; i < n; ++i)
        if (std::fabs(vals[static_cast<std::size_t>(i)] +
                      vals[static_cast<std::size_t>(n - 1 - i)]) > tol)
            eq.symmetric_spectrum = false;
    eq.radius_reflected = std::fabs(vals.front() + vals.back()) < tol;
    return eq;
}

std::pair<long long, long long> infer_bidegreed_counts(const IntPoly& p, int d1, int d2) {
    if (d1 == d2)
        throw precondition_error("degrees must be distinct");
    int n = p.degree();
    BigInt p2 = power_sums(p, 2)[1];
    BigInt numerator = p2 - BigInt(d2) * n;
    BigInt denom = d1 - d2;
    if (numerator % denom != 0)
        throw precondition_error("walk count not consistent with the two degrees");
    BigInt c1 = numerator / denom;
    BigInt c2 = BigInt(n) - c1;
    if (c1 < 0 || c2 < 0)
        throw precondition_error("walk count not consistent with the two degrees");
    return {c1.convert_to<long long>(), c2.convert_to<long long>()};
}

std::optional<std::pair<long long, long long>> complement_mate_bipartite(long long r,
                                                                         long long t) {
    if (r < 1 || t < 1)
        throw precondition_error("parameters must be >= 1");
    long long disc = r * (r + 4 * t);
    long long root = static_cast<long long>(std::sqrt(static_cast<double>(disc)));
    while (root * root > disc) --root;
    while ((root + 1) * (root + 1) <= disc) ++root;
    if (root * root != disc) return std::nullopt;
    long long sum = r + 2 * t;
    if ((sum - root) % 2 != 0) return std::nullopt;
    long long p = (sum - root) / 2;
    long long q = (sum + root) / 2;
    if (p < 1) return std::nullopt;
    return std::make_pair(p, q);
}

SweepSummary theorem_sweep(int order, bool keep_records, double tol) {
    SweepSummary summary;
    summary.order = order;

    EnumerationSpec spec;
    spec.order = order;
    std::mutex lock;
    enumerate_graphs_parallel(spec, 0, [&](const Graph& g) {
        SweepRecord rec;
        rec.connected = is_connected(g);

        OnePositiveReport onepos = one_positive_eigenvalue_check(g);
        rec.one_positive_ok = onepos.spectral == onepos.structural;

        rec.regularity_ok = regularity_from_spectrum(g, tol) == degree_profile(g).regular;

        rec.bipartite_ok = bipartite_equivalences(g, tol).all_agree();

        JoinDetectReport join = join_detect_check(g);
        rec.join_flag_ok = join.order_is_laplacian_eigenvalue == join.complement_disconnected;

        rec.rho = numeric_spectrum(g, MatrixKind::Adjacency, tol).front();
        if (rec.connected) {
            BoundReport b = check_bound(g, tol);
            rec.bound_ok = b.bound_holds &&
                         b.equality == (b.regular || b.biregular_with_max_degree);
            rec.bound = static_cast<double>(b.bound.to_long_double());
        }

        ThreeEigenvalueReport three = three_eigenvalue_check(g, tol);
        if (three.applies) {
            rec.three_eigenvalue_ok = three.diameter_two && three.theta2_nonneg &&
                                      three.theta2_zero_iff_complete_bipartite;
            rec.theta2 = three.theta2;
            rec.theta3 = three.theta3;
        }

        std::lock_guard<std::mutex> guard(lock);
        ++summary.graphs;
        if (!rec.ok()) ++summary.violations;
        if (keep_records || !rec.ok()) {
            rec.graph6 = graph6_encode(g);
            summary.records.push_back(std::move(rec));
        }
    });
    std::sort(summary.records.begin(), summary.records.end(),
              [](const SweepRecord& a, const SweepRecord& b) {
                  return a.graph6 < b.graph6;
              });
    return summary;
}

} // namespace sg
