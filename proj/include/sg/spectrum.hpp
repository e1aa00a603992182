#ifndef SG_SPECTRUM_HPP
#define SG_SPECTRUM_HPP

#include <string>
#include <utility>
#include <vector>

#include "sg/expr.hpp"
#include "sg/intpoly.hpp"
#include "sg/quadirr.hpp"

namespace sg {

struct SpectrumEntry {
    QuadIrr value;
    int multiplicity = 1;
    bool operator==(const SpectrumEntry&) const = default;
};

/// Exact eigenvalue multiset with quadratic-irrational entries, sorted
/// descending, equal values merged, zero multiplicities dropped.
class Spectrum {
public:
    Spectrum() = default;
    explicit Spectrum(std::vector<SpectrumEntry> entries);

    const std::vector<SpectrumEntry>& entries() const { return entries_; }
    int total_multiplicity() const;
    const QuadIrr& largest() const;
    bool contains(const QuadIrr& v) const;
    int multiplicity_of(const QuadIrr& v) const;

    /// Remove one copy of v; throws precondition_error if absent.
    Spectrum remove_one(const QuadIrr& v) const;

    std::vector<long double> to_long_doubles() const; // expanded, descending

    /// "[v]^m [v]^m ..." in descending order.
    std::string to_text() const;

    bool operator==(const Spectrum& o) const = default;

private:
    std::vector<SpectrumEntry> entries_;
};

/// Closed-form adjacency spectrum of K_r v sK_t:
/// {[-1]^{r-1+s(t-1)}, [t-1]^{s-1}, [(a±sqrt(a^2-4b))/2]^1} with
/// a = r+t-2 and b = (r-1)(t-1) - rst.
Spectrum multicone_adjacency_spectrum(const MulticoneParams& p);

/// Closed-form Laplacian spectrum of K_r v sK_t:
/// {[r+st]^r, [r+t]^{s(t-1)}, [r]^{s-1}, [0]^1}.
Spectrum multicone_laplacian_spectrum(const MulticoneParams& p);

/// Adjacency spectrum map for an r-regular graph of order n: one copy of
/// r becomes n-1-r, every other eigenvalue lambda becomes -1-lambda.
Spectrum complement_spectrum_regular(const Spectrum& s, int n, int r);

/// Laplacian complement map: drop one zero, alpha -> n - alpha, append 0.
Spectrum laplacian_complement_spectrum(const Spectrum& s, int n);

/// Laplacian join map: {n+k} u {k+alpha_i} u {n+beta_j} u {0}, after one
/// zero is dropped from each operand.
Spectrum laplacian_join_spectrum(const Spectrum& sg_, int n, const Spectrum& sh, int k);

/// Expand prod (x - lambda)^mult into an integer polynomial; conjugate
/// surd pairs combine into integer quadratics.  Throws when the multiset
/// is not conjugate-closed or a rational entry is not an integer.
IntPoly spectrum_to_poly(const Spectrum& s);

/// Characteristic polynomial of the complement of an r-regular graph of
/// order n, directly from its characteristic polynomial (the polynomial
/// form of the same eigenvalue map; exact for spectra whose entries are
/// not quadratic irrationals).
IntPoly complement_char_poly_regular(const IntPoly& p, int n, int r);

/// Laplacian polynomial of the complement from the Laplacian polynomial.
IntPoly laplacian_complement_char_poly(const IntPoly& p, int n);

/// Join polynomial for regular graphs:
/// (P1/(x-r1)) (P2/(x-r2)) ((x-r1)(x-r2) - n1 n2), all divisions exact.
IntPoly join_char_poly(const IntPoly& p1, int n1, int r1, const IntPoly& p2, int n2,
                       int r2);

} // namespace sg

#endif
