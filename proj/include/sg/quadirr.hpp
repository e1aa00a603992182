#ifndef SG_QUADIRR_HPP
#define SG_QUADIRR_HPP

#include <string>

namespace sg {

/// Exact quadratic irrational (p + c*sqrt(d))/q in a unique normal form:
/// q > 0, d squarefree, gcd(p, c, q) = 1, and d = 0 exactly for rational
/// values (c = 0 too).  Equality is field-wise; ordering is decided
/// exactly, without floating point.
class QuadIrr {
public:
    QuadIrr() = default; // zero

    static QuadIrr rational(long long p, long long q = 1);
    static QuadIrr integer(long long p) { return rational(p, 1); }
    /// (p + c*sqrt(d))/q with d >= 0; normalizes into canonical form.
    static QuadIrr surd(long long p, long long c, long long d, long long q);

    long long p() const { return p_; }
    long long c() const { return c_; }
    long long d() const { return d_; }
    long long q() const { return q_; }

    bool is_rational() const { return d_ == 0; }
    bool is_integer() const { return d_ == 0 && q_ == 1; }

    QuadIrr conjugate() const;           // c -> -c
    QuadIrr negate() const;              // v -> -v
    QuadIrr add_integer(long long k) const;
    QuadIrr subtract_from(long long k) const; // v -> k - v

    int sign() const;                    // exact
    bool operator==(const QuadIrr& o) const = default;
    bool operator<(const QuadIrr& o) const { return compare(*this, o) < 0; }
    bool operator>(const QuadIrr& o) const { return compare(*this, o) > 0; }

    static int compare(const QuadIrr& a, const QuadIrr& b); // -1/0/+1, exact

    long double to_long_double() const;
    double to_double() const { return static_cast<double>(to_long_double()); }

    /// Rendered as in: 3, -1/2, sqrt-free forms like (1+√17)/2, -√3.
    std::string to_string() const;

private:
    long long p_ = 0, c_ = 0, d_ = 0, q_ = 1;
};

} // namespace sg

#endif
