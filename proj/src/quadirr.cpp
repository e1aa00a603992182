#include "sg/quadirr.hpp"

#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "sg/errors.hpp"

namespace sg {

namespace {

using Big = boost::multiprecision::cpp_int;

int sign_big(const Big& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// sign of a + b*sqrt(d), d squarefree >= 2
int sign_surd(const Big& a, const Big& b, long long d) {
    if (b == 0) return sign_big(a);
    if (a == 0) return sign_big(b);
    if (a > 0 && b > 0) return 1;
    if (a < 0 && b < 0) return -1;
    // opposite signs: compare a^2 with b^2 d (equality impossible, d not a square)
    Big lhs = a * a, rhs = b * b * d;
    if (a > 0) return lhs > rhs ? 1 : -1;
    return lhs > rhs ? -1 : 1;
}

} // namespace

QuadIrr QuadIrr::rational(long long p, long long q) {
    return surd(p, 0, 0, q);
}

QuadIrr QuadIrr::surd(long long p, long long c, long long d, long long q) {
    if (q == 0)
        throw precondition_error("quadratic irrational with zero denominator");
    if (d < 0)
        throw precondition_error("negative radicand");
    if (q < 0) {
        p = -p;
        c = -c;
        q = -q;
    }
    if (d == 0 || c == 0) {
        c = 0;
        d = 0;
    } else {
        // pull square factors out of the radicand
        for (long long f = 2; f * f <= d; ++f) {
            while (d % (f * f) == 0) {
                d /= f * f;
                c *= f;
            }
        }
        if (d == 1) {
            p += c;
            c = 0;
            d = 0;
        }
    }
    long long g = std::gcd(std::gcd(std::llabs(p), std::llabs(c)), q);
    if (g > 1) {
        p /= g;
        c /= g;
        q /= g;
    }
    QuadIrr v;
    v.p_ = p;
    v.c_ = c;
    v.d_ = d;
    v.q_ = q;
    return v;
}

QuadIrr QuadIrr::conjugate() const { return surd(p_, -c_, d_, q_); }

QuadIrr QuadIrr::negate() const { return surd(-p_, -c_, d_, q_); }

QuadIrr QuadIrr::add_integer(long long k) const { return surd(p_ + k * q_, c_, d_, q_); }

QuadIrr QuadIrr::subtract_from(long long k) const {
    return surd(k * q_ - p_, -c_, d_, q_);
}

int QuadIrr::sign() const {
    return sign_surd(Big(p_), Big(c_), d_ == 0 ? 2 : d_);
}

int QuadIrr::compare(const QuadIrr& a, const QuadIrr& b) {
    // sign of (a - b) after clearing denominators:
    //   A + B*sqrt(da) - C*sqrt(db), with A = ap*bq - bp*aq
    Big A = Big(a.p_) * b.q_ - Big(b.p_) * a.q_;
    Big B = Big(a.c_) * b.q_;
    Big C = Big(b.c_) * a.q_;
    if (B == 0 && C == 0) return sign_big(A);
    if (C == 0) return sign_surd(A, B, a.d_);
    if (B == 0) return sign_surd(A, -C, b.d_);
    if (a.d_ == b.d_) return sign_surd(A, B - C, a.d_);
    // compare A + B*sqrt(da) against C*sqrt(db)
    int lhs = sign_surd(A, B, a.d_); // never 0 here (B != 0, da not square)
    int rhs = sign_big(C);
    if (lhs >= 0 && rhs < 0) return 1;
    if (lhs < 0 && rhs >= 0) return -1;
    if (lhs > 0 && rhs == 0) return 1;
    if (lhs < 0 && rhs == 0) return -1;
    // same strict sign: square both sides, one radical survives
    Big A2 = A * A + B * B * a.d_ - C * C * b.d_;
    Big B2 = 2 * A * B;
    int sq = sign_surd(A2, B2, a.d_);
    return lhs > 0 ? sq : -sq;
}

long double QuadIrr::to_long_double() const {
    long double v = static_cast<long double>(p_);
    if (c_ != 0)
        v += static_cast<long double>(c_) * std::sqrt(static_cast<long double>(d_));
    return v / static_cast<long double>(q_);
}

std::string QuadIrr::to_string() const {
    if (d_ == 0) {
        if (q_ == 1) return std::to_string(p_);
        return std::to_string(p_) + "/" + std::to_string(q_);
    }
    std::string surd_part;
    if (c_ == 1)
        surd_part = "√" + std::to_string(d_);
    else if (c_ == -1)
        surd_part = "-√" + std::to_string(d_);
    else
        surd_part = std::to_string(c_) + "√" + std::to_string(d_);
    std::string num;
    bool two_terms = p_ != 0;
    if (two_terms) {
        num = std::to_string(p_);
        num += (c_ > 0) ? "+" : "";
        num += surd_part;
    } else {
        num = surd_part;
    }
    if (q_ == 1) return num;
    if (two_terms) return "(" + num + ")/" + std::to_string(q_);
    return num + "/" + std::to_string(q_);
}

} // namespace sg
