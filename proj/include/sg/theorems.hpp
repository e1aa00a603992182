#ifndef SG_THEOREMS_HPP
#define SG_THEOREMS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sg/graph.hpp"
#include "sg/intpoly.hpp"
#include "sg/numeric.hpp"
#include "sg/quadirr.hpp"

namespace sg {

/// Spectral-radius bound report: rho <= (delta-1)/2 + sqrt(2m - n*delta +
/// (delta+1)^2/4), with equality exactly for regular graphs and bidegreed
/// graphs whose maximum degree is n-1.
struct BoundReport {
    QuadIrr bound;
    double rho = 0;
    bool bound_holds = false;
    bool equality = false;
    bool regular = false;
    bool biregular_with_max_degree = false; // bidegreed and max degree = n-1
};

/// Exact bound value (delta-1 + sqrt(8m - 4n*delta + (delta+1)^2))/2.
QuadIrr spectral_radius_bound(int n, long long m, int min_degree);

/// Requires a connected graph.
BoundReport check_bound(const Graph& g, double tol = kDefaultTol);

/// True when the spectral radius equals the average degree within tol.
bool regularity_from_spectrum(const Graph& g, double tol = kDefaultTol);

struct OnePositiveReport {
    bool spectral = false;   // exactly one positive root, exact count
    bool structural = false; // complete multipartite plus isolated vertices
};

OnePositiveReport one_positive_eigenvalue_check(const Graph& g);

/// Checks for connected nonregular graphs with exactly three distinct
/// eigenvalues; theta3 is reported without asserting theta3 < -2
/// (complete bipartite stars already sit at the boundary).
struct ThreeEigenvalueReport {
    bool applies = false;
    bool diameter_two = false;
    bool theta2_nonneg = false;
    bool theta2_zero_iff_complete_bipartite = false;
    double theta2 = 0;
    double theta3 = 0;
};

ThreeEigenvalueReport three_eigenvalue_check(const Graph& g, double tol = kDefaultTol);

struct JoinDetectReport {
    bool order_is_laplacian_eigenvalue = false; // exact polynomial test
    bool complement_disconnected = false;
};

JoinDetectReport join_detect_check(const Graph& g);

/// Bipartiteness equivalences: structure, vanishing coefficients (the
/// x^{n-k} coefficient for every odd k), sign-symmetric spectrum, and
/// rho = -lambda_min.  The first three are equivalent for every graph;
/// the radius form is equivalent only for connected graphs (C_4 + C_3
/// has rho = -lambda_min without being bipartite), so all_agree() demands
/// it two-sided only when connected and as a consequence of
/// bipartiteness otherwise.
struct BipartiteEquivalences {
    bool connected = false;
    bool structural = false;
    bool coefficients = false;
    bool symmetric_spectrum = false;
    bool radius_reflected = false;
    bool all_agree() const {
        bool base = structural == coefficients && structural == symmetric_spectrum;
        bool radius = connected ? radius_reflected == structural
                                : (!structural || radius_reflected);
        return base && radius;
    }
};

BipartiteEquivalences bipartite_equivalences(const Graph& g, double tol = kDefaultTol);

/// Vertex counts (count1, count2) for degrees (d1, d2) solving
/// count1 + count2 = n and d1*count1 + d2*count2 = p_2; throws
/// precondition_error when no nonnegative integer solution exists.
std::pair<long long, long long> infer_bidegreed_counts(const IntPoly& p, int d1, int d2);

/// Integer roots (p, q), p <= q, of x^2 - (r+2t)x + t^2 when the
/// discriminant r(r+4t) is a perfect square; K_{p,q} is then A-cospectral
/// with the complement of K_r v 2K_t.  Absence is a value, not an error.
std::optional<std::pair<long long, long long>> complement_mate_bipartite(long long r,
                                                                         long long t);

/// Per-graph record of one sweep over an enumerated order.
struct SweepRecord {
    std::string graph6;
    bool connected = false;
    bool one_positive_ok = false; // one positive eigenvalue: spectral == structural
    bool regularity_ok = false; // regularity from spectrum == structural regularity
    bool bipartite_ok = false; // all four bipartiteness equivalences agree
    bool join_flag_ok = false; // order-eigenvalue <=> join
    bool bound_ok = true;  // connected only: bound holds, equality iff shape
    bool three_eigenvalue_ok = true;  // when applicable: diameter 2 and theta2 behavior
    double rho = 0;
    std::optional<double> bound;          // connected graphs
    std::optional<double> theta2, theta3; // three-eigenvalue graphs
    bool ok() const { return one_positive_ok && regularity_ok && bipartite_ok && join_flag_ok && bound_ok && three_eigenvalue_ok; }
};

struct SweepSummary {
    int order = 0;
    long long graphs = 0;
    long long violations = 0;
    std::vector<SweepRecord> records; // populated when keep_records
};

SweepSummary theorem_sweep(int order, bool keep_records = false,
                           double tol = kDefaultTol);

} // namespace sg

#endif
