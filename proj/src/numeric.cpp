#include "sg/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sg {

namespace detail {

std::vector<long double> matrix_of(const Graph& g, MatrixKind kind) {
    int n = g.order();
    std::vector<long double> m(static_cast<std::size_t>(n) * n, 0.0L);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!g.adjacent(i, j)) continue;
            m[static_cast<std::size_t>(i) * n + j] =
                (kind == MatrixKind::Laplacian) ? -1.0L : 1.0L;
        }
        if (kind != MatrixKind::Adjacency)
            m[static_cast<std::size_t>(i) * n + i] = static_cast<long double>(g.degree(i));
    }
    return m;
}

void jacobi_eigen(int n, const std::vector<long double>& matrix,
                  std::vector<long double>& eigenvalues,
                  std::vector<std::vector<long double>>* vectors) {
    std::vector<long double> a = matrix;
    std::vector<long double> v;
    if (vectors) {
        v.assign(static_cast<std::size_t>(n) * n, 0.0L);
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0L;
    }
    auto at = [&](std::vector<long double>& m, int i, int j) -> long double& {
        return m[static_cast<std::size_t>(i) * n + j];
    };

    for (int sweep = 0; sweep < 100; ++sweep) {
        long double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::fabs(at(a, p, q));
        if (off == 0.0L) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                long double apq = at(a, p, q);
                if (apq == 0.0L) continue;
                long double theta = (at(a, q, q) - at(a, p, p)) / (2.0L * apq);
                long double t = (theta >= 0)
                                    ? 1.0L / (theta + std::sqrt(theta * theta + 1.0L))
                                    : 1.0L / (theta - std::sqrt(theta * theta + 1.0L));
                long double c = 1.0L / std::sqrt(t * t + 1.0L);
                long double s = t * c;

                long double app = at(a, p, p), aqq = at(a, q, q);
                at(a, p, p) = app - t * apq;
                at(a, q, q) = aqq + t * apq;
                at(a, p, q) = 0;
                at(a, q, p) = 0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    long double akp = at(a, k, p), akq = at(a, k, q);
                    at(a, k, p) = c * akp - s * akq;
                    at(a, p, k) = at(a, k, p);
                    at(a, k, q) = s * akp + c * akq;
                    at(a, q, k) = at(a, k, q);
                }
                if (vectors) {
                    for (int k = 0; k < n; ++k) {
                        long double vkp = at(v, k, p), vkq = at(v, k, q);
                        at(v, k, p) = c * vkp - s * vkq;
                        at(v, k, q) = s * vkp + c * vkq;
                    }
                }
            }
        }
    }

    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int x, int y) {
        return at(a, x, x) > at(a, y, y);
    });
    eigenvalues.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) eigenvalues[static_cast<std::size_t>(k)] = at(a, idx[static_cast<std::size_t>(k)], idx[static_cast<std::size_t>(k)]);
    if (vectors) {
        vectors->assign(static_cast<std::size_t>(n), std::vector<long double>(static_cast<std::size_t>(n)));
        for (int k = 0; k < n; ++k)
            for (int r = 0; r < n; ++r)
                (*vectors)[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)] =
                    at(v, r, idx[static_cast<std::size_t>(k)]);
    }
}

namespace {

// Splits the descending eigenvalue list into exactly `groups` clusters at
// the largest gaps.  The group count comes from the exact distinct-root
// count, so with eigenvalues accurate to ~1e-18 the split is unambiguous.
std::vector<std::pair<int, int>> cluster(const std::vector<long double>& vals, int groups) {
    int n = static_cast<int>(vals.size());
    std::vector<int> cut_order(static_cast<std::size_t>(std::max(0, n - 1)));
    std::iota(cut_order.begin(), cut_order.end(), 0);
    std::sort(cut_order.begin(), cut_order.end(), [&](int x, int y) {
        long double gx = vals[static_cast<std::size_t>(x)] - vals[static_cast<std::size_t>(x + 1)];
        long double gy = vals[static_cast<std::size_t>(y)] - vals[static_cast<std::size_t>(y + 1)];
        if (gx != gy) return gx > gy;
        return x < y;
    });
    std::vector<int> cuts(cut_order.begin(),
                          cut_order.begin() + std::min<std::size_t>(cut_order.size(),
                                                                    static_cast<std::size_t>(groups - 1)));
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::pair<int, int>> ranges;
    int start = 0;
    for (int c : cuts) {
        ranges.emplace_back(start, c + 1);
        start = c + 1;
    }
    ranges.emplace_back(start, n);
    return ranges;
}

// One long-double Newton polish of each cluster mean against the
// squarefree part of the exact polynomial.
long double refine_root(const IntPoly& squarefree, long double x0) {
    IntPoly d = squarefree.derivative();
    long double x = x0;
    for (int it = 0; it < 4; ++it) {
        long double fx = squarefree.evaluate_ld(x);
        long double dx = d.evaluate_ld(x);
        if (dx == 0.0L) break;
        long double step = fx / dx;
        x -= step;
        if (std::fabs(step) < 1e-21L) break;
    }
    return x;
}

struct AngleData {
    std::vector<long double> mu;                  // distinct, descending
    std::vector<std::vector<long double>> alpha_sq; // [i][vertex]
    bool ill_conditioned = false;
};

AngleData angle_data(const Graph& g, double tol) {
    int n = g.order();
    IntPoly p = char_poly(g, MatrixKind::Adjacency);
    int distinct = count_distinct_roots(p);
    auto m = detail::matrix_of(g, MatrixKind::Adjacency);
    std::vector<long double> vals;
    std::vector<std::vector<long double>> vecs;
    detail::jacobi_eigen(n, m, vals, &vecs);

    auto ranges = cluster(vals, distinct);
    IntPoly sf = squarefree_part(p);

    AngleData out;
    for (auto [lo, hi] : ranges) {
        long double mean = 0;
        for (int k = lo; k < hi; ++k) mean += vals[static_cast<std::size_t>(k)];
        mean /= (hi - lo);
        out.mu.push_back(refine_root(sf, mean));
        std::vector<long double> asq(static_cast<std::size_t>(n), 0.0L);
        for (int k = lo; k < hi; ++k)
            for (int j = 0; j < n; ++j)
                asq[static_cast<std::size_t>(j)] +=
                    vecs[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] *
                    vecs[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        out.alpha_sq.push_back(std::move(asq));
    }
    for (std::size_t i = 1; i < out.mu.size(); ++i)
        if (out.mu[i - 1] - out.mu[i] < 10.0L * static_cast<long double>(tol))
            out.ill_conditioned = true;
    return out;
}

} // namespace

} // namespace detail

std::vector<double> numeric_spectrum(const Graph& g, MatrixKind kind, double tol) {
    if (tol <= 0)
        throw precondition_error("tolerance must be positive");
    std::vector<long double> vals;
    detail::jacobi_eigen(g.order(), detail::matrix_of(g, kind), vals, nullptr);
    return std::vector<double>(vals.begin(), vals.end());
}

MainAngles main_angles(const Graph& g, double tol) {
    if (tol <= 0)
        throw precondition_error("tolerance must be positive");
    auto data = detail::angle_data(g, tol);
    MainAngles out;
    out.ill_conditioned = data.ill_conditioned;
    out.eigenvalues.assign(data.mu.begin(), data.mu.end());
    for (const auto& row : data.alpha_sq)
        out.alpha_sq.emplace_back(row.begin(), row.end());
    return out;
}

double vertex_deleted_identity_residual(const Graph& g, int j,
                                        const std::vector<double>& xs, double tol) {
    int n = g.order();
    if (j < 0 || j >= n)
        throw precondition_error("vertex out of range");
    if (tol <= 0)
        throw precondition_error("tolerance must be positive");

    IntPoly pg = char_poly(g, MatrixKind::Adjacency);
    IntPoly pd = char_poly(g.without_vertex(j), MatrixKind::Adjacency);

    std::vector<long double> vals;
    detail::jacobi_eigen(n, detail::matrix_of(g, MatrixKind::Adjacency), vals, nullptr);

    long double worst = 0;
    for (double xd : xs) {
        long double x = xd;
        for (long double mu : vals)
            if (std::fabs(x - mu) <= 10.0L * static_cast<long double>(tol))
                throw precondition_error("sample point too close to an eigenvalue");

        // resolvent entry: y = (xI - A)^{-1} e_j, so y_j equals the
        // main-angle sum  sum_i alpha_sq[i][j] / (x - mu_i)
        std::vector<long double> a(static_cast<std::size_t>(n) * n, 0.0L);
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c)
                a[static_cast<std::size_t>(r) * n + c] = g.adjacent(r, c) ? -1.0L : 0.0L;
            a[static_cast<std::size_t>(r) * n + r] = x;
        }
        std::vector<long double> y(static_cast<std::size_t>(n), 0.0L);
        y[static_cast<std::size_t>(j)] = 1.0L;
        // Gaussian elimination with partial pivoting
        for (int col = 0; col < n; ++col) {
            int best = col;
            for (int r = col + 1; r < n; ++r)
                if (std::fabs(a[static_cast<std::size_t>(r) * n + col]) >
                    std::fabs(a[static_cast<std::size_t>(best) * n + col]))
                    best = r;
            if (best != col) {
                for (int c = 0; c < n; ++c)
                    std::swap(a[static_cast<std::size_t>(col) * n + c],
                              a[static_cast<std::size_t>(best) * n + c]);
                std::swap(y[static_cast<std::size_t>(col)], y[static_cast<std::size_t>(best)]);
            }
            long double d = a[static_cast<std::size_t>(col) * n + col];
            for (int r = col + 1; r < n; ++r) {
                long double f = a[static_cast<std::size_t>(r) * n + col] / d;
                if (f == 0.0L) continue;
                for (int c = col; c < n; ++c)
                    a[static_cast<std::size_t>(r) * n + c] -=
                        f * a[static_cast<std::size_t>(col) * n + c];
                y[static_cast<std::size_t>(r)] -= f * y[static_cast<std::size_t>(col)];
            }
        }
        for (int r = n - 1; r >= 0; --r) {
            long double acc = y[static_cast<std::size_t>(r)];
            for (int c = r + 1; c < n; ++c)
                acc -= a[static_cast<std::size_t>(r) * n + c] * y[static_cast<std::size_t>(c)];
            y[static_cast<std::size_t>(r)] = acc / a[static_cast<std::size_t>(r) * n + r];
        }

        long double rhs = pg.evaluate_ld(x) * y[static_cast<std::size_t>(j)];
        long double lhs = pd.evaluate_ld(x);
        worst = std::max(worst, std::fabs(lhs - rhs));
    }
    return static_cast<double>(worst);
}

} // namespace sg
