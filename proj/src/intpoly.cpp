#include "sg/intpoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace sg {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

const char* matrix_kind_name(MatrixKind k) {
    switch (k) {
        case MatrixKind::Adjacency: return "adjacency";
        case MatrixKind::Laplacian: return "laplacian";
        case MatrixKind::Signless: return "signless";
    }
    return "?";
}

MatrixKind matrix_kind_from_name(const std::string& name) {
    if (name == "adjacency" || name == "a") return MatrixKind::Adjacency;
    if (name == "laplacian" || name == "l") return MatrixKind::Laplacian;
    if (name == "signless" || name == "q" || name == "signless-laplacian")
        return MatrixKind::Signless;
    throw precondition_error("unknown matrix kind: " + name);
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw precondition_error("polynomial needs at least one coefficient");
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::from_int_coeffs(const std::vector<long long>& coeffs) {
    std::vector<BigInt> c(coeffs.begin(), coeffs.end());
    return IntPoly(std::move(c));
}

IntPoly IntPoly::linear(const BigInt& root) {
    return IntPoly(std::vector<BigInt>{-root, BigInt(1)});
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::divide_linear(const BigInt& root) const {
    if (degree() < 1)
        throw precondition_error("cannot divide a constant by a linear factor");
    std::vector<BigInt> out(coeffs_.size() - 1);
    BigInt carry = 0;
    for (int i = degree(); i >= 1; --i) {
        carry = coeffs_[static_cast<std::size_t>(i)] + carry * root;
        out[static_cast<std::size_t>(i - 1)] = carry;
    }
    BigInt rem = coeffs_[0] + carry * root;
    if (rem != 0)
        throw precondition_error("polynomial not divisible by (x - " + root.str() + ")");
    return IntPoly(std::move(out));
}

BigInt IntPoly::evaluate(const BigInt& c) const {
    BigInt acc = 0;
    for (int i = degree(); i >= 0; --i) acc = acc * c + coeffs_[static_cast<std::size_t>(i)];
    return acc;
}

long double IntPoly::evaluate_ld(long double x) const {
    long double acc = 0;
    for (int i = degree(); i >= 0; --i)
        acc = acc * x + static_cast<long double>(coeffs_[static_cast<std::size_t>(i)]);
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (degree() == 0) return IntPoly(std::vector<BigInt>{BigInt(0)});
    std::vector<BigInt> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = coeffs_[i] * static_cast<long long>(i);
    return IntPoly(std::move(out));
}

IntPoly IntPoly::reflect(const BigInt& shift) const {
    // q(x) = p(-x - shift), computed by Horner over the polynomial ring
    IntPoly acc(std::vector<BigInt>{BigInt(0)});
    IntPoly var(std::vector<BigInt>{-shift, BigInt(-1)});
    for (int i = degree(); i >= 0; --i) {
        acc = acc * var;
        acc = acc + IntPoly(std::vector<BigInt>{coeffs_[static_cast<std::size_t>(i)]});
    }
    return acc;
}

IntPoly IntPoly::reverse_shift(const BigInt& shift) const {
    IntPoly acc(std::vector<BigInt>{BigInt(0)});
    IntPoly var(std::vector<BigInt>{shift, BigInt(-1)});
    for (int i = degree(); i >= 0; --i) {
        acc = acc * var;
        acc = acc + IntPoly(std::vector<BigInt>{coeffs_[static_cast<std::size_t>(i)]});
    }
    return acc;
}

std::vector<std::string> IntPoly::to_decimal() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.str());
    return out;
}

std::string IntPoly::to_display() const {
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0 && degree() > 0) continue;
        BigInt a = abs(c);
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += (c < 0) ? " - " : " + ";
        }
        bool unit = a == 1 && i > 0;
        if (!unit) s += a.str();
        if (i > 0) {
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    if (s.empty()) s = "0";
    return s;
}

namespace {

// Faddeev-LeVerrier over an exact integer type: with B_1 = M,
// c_{n-k} = -tr(B_k)/k and B_{k+1} = M (B_k + c_{n-k} I).
// All divisions are exact.
template <typename Int>
std::vector<Int> faddeev_leverrier(int n, const std::vector<Int>& m) {
    std::vector<Int> coeffs(static_cast<std::size_t>(n) + 1);
    coeffs[static_cast<std::size_t>(n)] = 1;
    std::vector<Int> b(m); // B_1 = M
    std::vector<Int> next(static_cast<std::size_t>(n) * n);
    for (int k = 1; k <= n; ++k) {
        Int tr = 0;
        for (int i = 0; i < n; ++i) tr += b[static_cast<std::size_t>(i) * n + i];
        Int c = -tr / k;
        coeffs[static_cast<std::size_t>(n - k)] = c;
        if (k == n) break;
        for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i) * n + i] += c;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Int acc = 0;
                for (int l = 0; l < n; ++l)
                    acc += m[static_cast<std::size_t>(i) * n + l] *
                           b[static_cast<std::size_t>(l) * n + j];
                next[static_cast<std::size_t>(i) * n + j] = acc;
            }
        }
        std::swap(b, next);
    }
    return coeffs;
}

template <typename Int>
std::vector<Int> build_matrix(const Graph& g, MatrixKind kind) {
    int n = g.order();
    std::vector<Int> m(static_cast<std::size_t>(n) * n, Int(0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!g.adjacent(i, j)) continue;
            m[static_cast<std::size_t>(i) * n + j] =
                (kind == MatrixKind::Laplacian) ? Int(-1) : Int(1);
        }
        if (kind != MatrixKind::Adjacency)
            m[static_cast<std::size_t>(i) * n + i] = Int(g.degree(i));
    }
    return m;
}

// Every intermediate of the recurrence is bounded by n * 2^n * R^n where
// R is the max absolute row sum (Gershgorin bound on |lambda|), so the
// int64 kernel is safe whenever that stays below 2^61.
bool int64_kernel_safe(const Graph& g, MatrixKind kind) {
    int n = g.order();
    long double r = 0;
    for (int v = 0; v < n; ++v) {
        long double row = g.degree(v);
        if (kind != MatrixKind::Adjacency) row *= 2;
        r = std::max(r, row);
    }
    if (r < 1) r = 1;
    long double bound = static_cast<long double>(n) * std::pow(2.0L, n) * std::pow(r, n);
    return bound < std::pow(2.0L, 61);
}

} // namespace

IntPoly char_poly(const Graph& g, MatrixKind kind) {
    int n = g.order();
    if (int64_kernel_safe(g, kind)) {
        auto m = build_matrix<std::int64_t>(g, kind);
        auto c = faddeev_leverrier<std::int64_t>(n, m);
        std::vector<BigInt> out(c.begin(), c.end());
        return IntPoly(std::move(out));
    }
    auto m = build_matrix<BigInt>(g, kind);
    return IntPoly(faddeev_leverrier<BigInt>(n, m));
}

std::vector<BigInt> power_sums(const IntPoly& p, int kmax) {
    if (kmax < 1)
        throw precondition_error("kmax must be >= 1");
    if (!p.monic())
        throw precondition_error("power sums require a monic polynomial");
    int n = p.degree();
    // e_j = (-1)^j c_{n-j}; e_j = 0 for j > n
    auto e = [&](int j) -> BigInt {
        if (j > n) return BigInt(0);
        BigInt v = p.coeff(n - j);
        return (j % 2 == 0) ? v : -v;
    };
    std::vector<BigInt> ps(static_cast<std::size_t>(kmax) + 1);
    for (int k = 1; k <= kmax; ++k) {
        // p_k = (-1)^{k-1} k e_k + sum_{i=1}^{k-1} (-1)^{k-1+i} e_{k-i} p_i
        BigInt acc = e(k) * k;
        if (k % 2 == 0) acc = -acc;
        for (int i = 1; i < k; ++i) {
            BigInt term = e(k - i) * ps[static_cast<std::size_t>(i)];
            if ((k - 1 + i) % 2 != 0) term = -term;
            acc += term;
        }
        ps[static_cast<std::size_t>(k)] = acc;
    }
    return std::vector<BigInt>(ps.begin() + 1, ps.end());
}

namespace {

std::vector<BigInt> trim(std::vector<BigInt> v) {
    while (v.size() > 1 && v.back() == 0) v.pop_back();
    if (v.empty()) v.push_back(BigInt(0));
    return v;
}

BigInt content(const std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const auto& c : v) g = gcd(g, c);
    return g == 0 ? BigInt(1) : g;
}

std::vector<BigInt> make_primitive(std::vector<BigInt> v) {
    BigInt c = content(v);
    if (c > 1)
        for (auto& x : v) x /= c;
    if (!v.empty() && v.back() < 0)
        for (auto& x : v) x = -x;
    return v;
}

// Primitive pseudo-remainder sequence.
std::vector<BigInt> prs_gcd(std::vector<BigInt> a, std::vector<BigInt> b) {
    a = make_primitive(trim(std::move(a)));
    b = make_primitive(trim(std::move(b)));
    if (b.size() > a.size()) std::swap(a, b);
    while (!(b.size() == 1 && b[0] == 0)) {
        // pseudo-remainder of a by b
        std::vector<BigInt> r = a;
        const BigInt& lead = b.back();
        int db = static_cast<int>(b.size()) - 1;
        while (true) {
            r = trim(std::move(r));
            int dr = static_cast<int>(r.size()) - 1;
            if (dr < db || (dr == 0 && r[0] == 0)) break;
            BigInt q = r.back();
            for (auto& x : r) x *= lead;
            for (int i = 0; i <= db; ++i)
                r[static_cast<std::size_t>(dr - db + i)] -= q * b[static_cast<std::size_t>(i)];
            r.pop_back(); // the leading term cancels exactly
        }
        a = std::move(b);
        b = make_primitive(std::move(r));
    }
    return a;
}

} // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    auto g = prs_gcd(a.coeffs(), b.coeffs());
    return IntPoly(std::move(g));
}

namespace {

using BigRat = boost::multiprecision::cpp_rational;

int sign_of(const BigRat& x) {
    if (x > 0) return 1;
    if (x < 0) return -1;
    return 0;
}

std::vector<std::vector<BigRat>> sturm_chain(const IntPoly& p) {
    std::vector<std::vector<BigRat>> chain;
    std::vector<BigRat> f0, f1;
    for (const auto& c : p.coeffs()) f0.emplace_back(c);
    IntPoly d = p.derivative();
    for (const auto& c : d.coeffs()) f1.emplace_back(c);
    auto trimr = [](std::vector<BigRat> v) {
        while (v.size() > 1 && v.back() == 0) v.pop_back();
        if (v.empty()) v.emplace_back(0);
        return v;
    };
    auto is_zero = [](const std::vector<BigRat>& v) {
        return v.size() == 1 && v[0] == 0;
    };
    f0 = trimr(std::move(f0));
    f1 = trimr(std::move(f1));
    chain.push_back(f0);
    if (is_zero(f1)) return chain;
    chain.push_back(f1);
    while (chain.back().size() > 1) {
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        // remainder of a / b, negated
        std::vector<BigRat> r = a;
        int db = static_cast<int>(b.size()) - 1;
        while (true) {
            r = trimr(std::move(r));
            int dr = static_cast<int>(r.size()) - 1;
            if (dr < db || is_zero(r)) break;
            BigRat q = r.back() / b.back();
            for (int i = 0; i <= db; ++i)
                r[static_cast<std::size_t>(dr - db + i)] -= q * b[static_cast<std::size_t>(i)];
            r.pop_back();
        }
        for (auto& x : r) x = -x;
        if (is_zero(r)) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

int variations_at_zero(const std::vector<std::vector<BigRat>>& chain) {
    int var = 0, prev = 0;
    for (const auto& f : chain) {
        // sign of f(0+): first nonzero coefficient from the bottom
        int s = 0;
        for (const auto& c : f) {
            if (c != 0) {
                s = sign_of(c);
                break;
            }
        }
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int variations_at_pos_infinity(const std::vector<std::vector<BigRat>>& chain) {
    int var = 0, prev = 0;
    for (const auto& f : chain) {
        int s = sign_of(f.back());
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// Distinct roots in (0, inf) of a squarefree polynomial.
int sturm_positive_distinct(const IntPoly& squarefree) {
    if (squarefree.degree() == 0) return 0;
    // remove the root at zero if present
    IntPoly p = squarefree;
    if (p.coeff(0) == 0) p = p.divide_linear(BigInt(0));
    if (p.degree() == 0) return 0;
    auto chain = sturm_chain(p);
    return variations_at_zero(chain) - variations_at_pos_infinity(chain);
}

} // namespace

IntPoly squarefree_part(const IntPoly& p) {
    if (p.degree() <= 1) return p;
    IntPoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    // exact division p / g via rational long division
    std::vector<BigRat> r;
    for (const auto& c : p.coeffs()) r.emplace_back(c);
    const auto& gc = g.coeffs();
    int dg = g.degree();
    std::vector<BigRat> q(p.coeffs().size() - gc.size() + 1);
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        BigRat f = r[static_cast<std::size_t>(i + dg)] / BigRat(gc.back());
        q[static_cast<std::size_t>(i)] = f;
        for (int j = 0; j <= dg; ++j)
            r[static_cast<std::size_t>(i + j)] -= f * BigRat(gc[static_cast<std::size_t>(j)]);
    }
    std::vector<BigInt> out;
    out.reserve(q.size());
    for (const auto& c : q) {
        if (denominator(c) != 1)
            throw precondition_error("squarefree division left a fraction");
        out.push_back(numerator(c));
    }
    return IntPoly(std::move(out));
}

int count_distinct_roots(const IntPoly& p) {
    if (p.degree() == 0) return 0;
    IntPoly g = poly_gcd(p, p.derivative());
    return p.degree() - g.degree();
}

int count_distinct_positive_roots(const IntPoly& p) {
    return sturm_positive_distinct(squarefree_part(p));
}

int count_positive_roots(const IntPoly& p) {
    // Positive roots of p with multiplicity m contribute to the gcd
    // cascade m times: p, gcd(p,p'), gcd of that with its derivative, ...
    int total = 0;
    IntPoly cur = p;
    while (cur.degree() > 0) {
        total += count_distinct_positive_roots(cur);
        IntPoly g = poly_gcd(cur, cur.derivative());
        if (g.degree() == 0) break;
        cur = g;
    }
    return total;
}

} // namespace sg
