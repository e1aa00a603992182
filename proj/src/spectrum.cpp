#include "sg/spectrum.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

namespace sg {

Spectrum::Spectrum(std::vector<SpectrumEntry> entries) {
    for (const auto& e : entries) {
        if (e.multiplicity < 0)
            throw precondition_error("negative multiplicity");
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        return QuadIrr::compare(a.value, b.value) > 0;
    });
    for (auto& e : entries) {
        if (e.multiplicity == 0) continue;
        if (!entries_.empty() && entries_.back().value == e.value)
            entries_.back().multiplicity += e.multiplicity;
        else
            entries_.push_back(e);
    }
}

int Spectrum::total_multiplicity() const {
    int total = 0;
    for (const auto& e : entries_) total += e.multiplicity;
    return total;
}

const QuadIrr& Spectrum::largest() const {
    if (entries_.empty())
        throw precondition_error("empty spectrum");
    return entries_.front().value;
}

bool Spectrum::contains(const QuadIrr& v) const { return multiplicity_of(v) > 0; }

int Spectrum::multiplicity_of(const QuadIrr& v) const {
    for (const auto& e : entries_)
        if (e.value == v) return e.multiplicity;
    return 0;
}

Spectrum Spectrum::remove_one(const QuadIrr& v) const {
    std::vector<SpectrumEntry> out = entries_;
    for (auto& e : out) {
        if (e.value == v) {
            e.multiplicity -= 1;
            return Spectrum(std::move(out));
        }
    }
    throw precondition_error("value not present in spectrum");
}

std::vector<long double> Spectrum::to_long_doubles() const {
    std::vector<long double> out;
    for (const auto& e : entries_)
        for (int i = 0; i < e.multiplicity; ++i)
            out.push_back(e.value.to_long_double());
    return out;
}

std::string Spectrum::to_text() const {
    std::string s;
    for (const auto& e : entries_) {
        if (!s.empty()) s += " ";
        s += "[" + e.value.to_string() + "]^" + std::to_string(e.multiplicity);
    }
    return s;
}

Spectrum multicone_adjacency_spectrum(const MulticoneParams& mp) {
    long long r = mp.r, s = mp.s, t = mp.t;
    long long a = r + t - 2;
    long long b = (r - 1) * (t - 1) - r * s * t;
    long long radicand = a * a - 4 * b;
    std::vector<SpectrumEntry> entries;
    entries.push_back({QuadIrr::integer(-1), static_cast<int>(r - 1 + s * (t - 1))});
    entries.push_back({QuadIrr::integer(t - 1), static_cast<int>(s - 1)});
    entries.push_back({QuadIrr::surd(a, 1, radicand, 2), 1});
    entries.push_back({QuadIrr::surd(a, -1, radicand, 2), 1});
    return Spectrum(std::move(entries));
}

Spectrum multicone_laplacian_spectrum(const MulticoneParams& mp) {
    int r = mp.r, s = mp.s, t = mp.t;
    std::vector<SpectrumEntry> entries;
    entries.push_back({QuadIrr::integer(r + static_cast<long long>(s) * t), r});
    entries.push_back({QuadIrr::integer(r + t), s * (t - 1)});
    entries.push_back({QuadIrr::integer(r), s - 1});
    entries.push_back({QuadIrr::integer(0), 1});
    return Spectrum(std::move(entries));
}

Spectrum complement_spectrum_regular(const Spectrum& s, int n, int r) {
    if (s.total_multiplicity() != n)
        throw precondition_error("spectrum size does not match order");
    QuadIrr reg = QuadIrr::integer(r);
    if (s.entries().empty() || !(s.largest() == reg))
        throw precondition_error("not the spectrum of an r-regular graph");
    Spectrum rest = s.remove_one(reg);
    std::vector<SpectrumEntry> out;
    out.push_back({QuadIrr::integer(n - 1 - r), 1});
    for (const auto& e : rest.entries())
        out.push_back({e.value.subtract_from(-1), e.multiplicity});
    return Spectrum(std::move(out));
}

Spectrum laplacian_complement_spectrum(const Spectrum& s, int n) {
    if (s.total_multiplicity() != n)
        throw precondition_error("spectrum size does not match order");
    QuadIrr zero;
    if (!s.contains(zero))
        throw precondition_error("Laplacian spectrum must contain 0");
    if (QuadIrr::compare(s.largest(), QuadIrr::integer(n)) > 0)
        throw precondition_error("Laplacian eigenvalue exceeds order");
    Spectrum rest = s.remove_one(zero);
    std::vector<SpectrumEntry> out;
    for (const auto& e : rest.entries())
        out.push_back({e.value.subtract_from(n), e.multiplicity});
    out.push_back({zero, 1});
    return Spectrum(std::move(out));
}

Spectrum laplacian_join_spectrum(const Spectrum& sg_, int n, const Spectrum& sh, int k) {
    if (sg_.total_multiplicity() != n || sh.total_multiplicity() != k)
        throw precondition_error("spectrum size does not match order");
    QuadIrr zero;
    if (!sg_.contains(zero) || !sh.contains(zero))
        throw precondition_error("Laplacian spectrum must contain 0");
    Spectrum g = sg_.remove_one(zero);
    Spectrum h = sh.remove_one(zero);
    std::vector<SpectrumEntry> out;
    out.push_back({QuadIrr::integer(n + k), 1});
    for (const auto& e : g.entries())
        out.push_back({e.value.add_integer(k), e.multiplicity});
    for (const auto& e : h.entries())
        out.push_back({e.value.add_integer(n), e.multiplicity});
    out.push_back({zero, 1});
    return Spectrum(std::move(out));
}

IntPoly spectrum_to_poly(const Spectrum& s) {
    using Big = boost::multiprecision::cpp_int;
    IntPoly result;
    std::vector<bool> used(s.entries().size(), false);
    const auto& es = s.entries();
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (used[i]) continue;
        const QuadIrr& v = es[i].value;
        if (v.is_rational()) {
            if (!v.is_integer())
                throw precondition_error("rational eigenvalue is not an integer: " +
                                         v.to_string());
            IntPoly lin = IntPoly::linear(BigInt(v.p()));
            for (int m = 0; m < es[i].multiplicity; ++m) result = result * lin;
            used[i] = true;
            continue;
        }
        // find the conjugate partner
        QuadIrr conj = v.conjugate();
        std::size_t partner = es.size();
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (!used[j] && es[j].value == conj) {
                partner = j;
                break;
            }
        if (partner == es.size() || es[partner].multiplicity != es[i].multiplicity)
            throw precondition_error("spectrum is not conjugate-closed at " +
                                     v.to_string());
        // (x - v)(x - conj v) = x^2 - (2p/q) x + (p^2 - c^2 d)/q^2
        Big q(v.q());
        Big two_p = Big(2) * v.p();
        Big norm = Big(v.p()) * v.p() - Big(v.c()) * v.c() * v.d();
        if (two_p % q != 0 || norm % (q * q) != 0)
            throw precondition_error("conjugate pair does not expand integrally: " +
                                     v.to_string());
        IntPoly quad(std::vector<BigInt>{BigInt(norm / (q * q)), BigInt(-two_p / q),
                                         BigInt(1)});
        for (int m = 0; m < es[i].multiplicity; ++m) result = result * quad;
        used[i] = true;
        used[partner] = true;
    }
    return result;
}

IntPoly complement_char_poly_regular(const IntPoly& p, int n, int r) {
    if (p.degree() != n)
        throw precondition_error("polynomial degree does not match order");
    if (p.evaluate(BigInt(r)) != 0)
        throw precondition_error("r is not an eigenvalue: input not r-regular");
    IntPoly t = p.reflect(BigInt(1));                       // p(-x-1)
    t = t.divide_linear(BigInt(-1 - r));                    // remove image of r
    t = t * IntPoly::linear(BigInt(n - 1 - r));             // insert n-1-r
    if (n % 2 != 0) t = t * IntPoly(std::vector<BigInt>{BigInt(-1)});
    return t;
}

IntPoly laplacian_complement_char_poly(const IntPoly& p, int n) {
    if (p.degree() != n)
        throw precondition_error("polynomial degree does not match order");
    IntPoly rest = p.divide_linear(BigInt(0)); // drop the zero eigenvalue
    IntPoly t = rest.reverse_shift(BigInt(n)); // alpha -> n - alpha
    if ((n - 1) % 2 != 0) t = t * IntPoly(std::vector<BigInt>{BigInt(-1)});
    return t * IntPoly::linear(BigInt(0));
}

IntPoly join_char_poly(const IntPoly& p1, int n1, int r1, const IntPoly& p2, int n2,
                       int r2) {
    if (p1.degree() != n1 || p2.degree() != n2)
        throw precondition_error("polynomial degree does not match order");
    IntPoly q1 = p1.divide_linear(BigInt(r1));
    IntPoly q2 = p2.divide_linear(BigInt(r2));
    IntPoly cross = IntPoly::linear(BigInt(r1)) * IntPoly::linear(BigInt(r2)) -
                    IntPoly(std::vector<BigInt>{BigInt(n1) * n2});
    return q1 * q2 * cross;
}

} // namespace sg
