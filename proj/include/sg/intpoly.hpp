#ifndef SG_INTPOLY_HPP
#define SG_INTPOLY_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sg/graph.hpp"

namespace sg {

using BigInt = boost::multiprecision::cpp_int;

enum class MatrixKind { Adjacency, Laplacian, Signless };

const char* matrix_kind_name(MatrixKind k);
MatrixKind matrix_kind_from_name(const std::string& name);

/// Monic polynomial with exact integer coefficients, stored low to high
/// (coeffs[i] multiplies x^i).
class IntPoly {
public:
    IntPoly() : coeffs_{BigInt(1)} {}                 // constant 1
    explicit IntPoly(std::vector<BigInt> coeffs);     // trims, must be nonempty

    static IntPoly from_int_coeffs(const std::vector<long long>& coeffs);
    /// (x - root)
    static IntPoly linear(const BigInt& root);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    bool monic() const { return coeffs_.back() == 1; }

    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

    /// Exact division by (x - root); throws precondition_error when the
    /// remainder is nonzero.
    IntPoly divide_linear(const BigInt& root) const;

    /// p(c) exactly.
    BigInt evaluate(const BigInt& c) const;
    long double evaluate_ld(long double x) const;

    IntPoly derivative() const;

    /// Substitute x -> -x - shift (used by the complement transforms).
    IntPoly reflect(const BigInt& shift) const;
    /// Substitute x -> shift - x.
    IntPoly reverse_shift(const BigInt& shift) const;

    /// Coefficients as decimal strings, low to high.
    std::vector<std::string> to_decimal() const;
    std::string to_display() const; // human form, highest power first

private:
    std::vector<BigInt> coeffs_;
};

/// det(xI - M) for the adjacency/Laplacian/signless matrix of g, exact.
/// Uses a 64-bit kernel when a proven overflow bound allows it and the
/// arbitrary-precision kernel otherwise; both implement the same
/// Faddeev-LeVerrier recurrence (the internal divisions are exact).
IntPoly char_poly(const Graph& g, MatrixKind kind);

/// Power sums p_k = sum lambda_i^k for k = 1..kmax via Newton's
/// identities; for adjacency polynomials p_k counts closed k-walks.
std::vector<BigInt> power_sums(const IntPoly& p, int kmax);

/// Content-free gcd over the integers (primitive pseudo-remainders).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// p / gcd(p, p'), the squarefree part (exact division).
IntPoly squarefree_part(const IntPoly& p);

/// Number of roots in (0, inf) counted with multiplicity (Sturm chains
/// on successive gcd cofactors, exact rational arithmetic).
int count_positive_roots(const IntPoly& p);

/// Number of distinct complex roots: degree - deg gcd(p, p').
int count_distinct_roots(const IntPoly& p);

/// Exact number of roots in (0, inf) of the squarefree part (distinct
/// positive roots).
int count_distinct_positive_roots(const IntPoly& p);

} // namespace sg

#endif
