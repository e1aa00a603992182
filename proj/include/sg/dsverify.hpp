#ifndef SG_DSVERIFY_HPP
#define SG_DSVERIFY_HPP

#include <string>
#include <vector>

#include "sg/enumerate.hpp"
#include "sg/expr.hpp"
#include "sg/graph.hpp"
#include "sg/intpoly.hpp"

namespace sg {

/// Result of an exhaustive same-order cospectral-mate search.  The mate
/// list holds canonical graph6 strings, isomorphs of the target excluded;
/// verdict is "determined" exactly when it is empty.
struct DSReport {
    std::string target;      // canonical graph6
    MatrixKind kind = MatrixKind::Adjacency;
    int order = 0;
    bool connected_only = false;
    long long enumerated = 0; // candidates surviving the prefilters
    std::vector<std::string> mates;
    bool determined = false;
    double seconds = 0;
};

/// One polynomial shared by several isomorphism classes.
struct CospectralClass {
    std::vector<std::string> coeffs; // decimal, low to high
    std::vector<std::string> members; // canonical graph6, sorted
};

struct CensusReport {
    int order = 0;
    MatrixKind kind = MatrixKind::Adjacency;
    long long total_classes = 0;
    std::vector<CospectralClass> nontrivial;
    long long not_determined = 0; // graphs lying in nontrivial classes
    double seconds = 0;
};

/// Throttled search-progress lines ("... graphs, ... graphs/s") on
/// standard error from the enumeration-backed operations below.
void set_progress_logging(bool enabled);

/// All isomorphism-class representatives of order n whose polynomial of
/// the given kind equals target, exactly.  Edge (all kinds) and triangle
/// (adjacency) prefilters are derived from the target coefficients; they
/// can be disabled to cross-check their safety.
std::vector<Graph> find_cospectral_mates(const IntPoly& target, int n, MatrixKind kind,
                                         bool connected_only,
                                         bool use_prefilters = true);

DSReport verify_ds(const Graph& g, MatrixKind kind, bool connected_only);

CensusReport cospectral_census(int n, MatrixKind kind);

struct FamilyCheck {
    MulticoneParams params;
    DSReport report;
    bool degree_profile_ok = false; // min r+t-1; bidegreed or complete
};

/// verify_ds over every multicone with r <= r_max, s <= s_max, t <= t_max
/// and r + s*t <= order_cap (connected-only search for the adjacency
/// kind, unrestricted otherwise), plus the degree-profile cross-check.
std::vector<FamilyCheck> verify_multicone_family(int r_max, int s_max, int t_max,
                                                 int order_cap, MatrixKind kind);

} // namespace sg

#endif
