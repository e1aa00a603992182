#ifndef SG_NUMERIC_HPP
#define SG_NUMERIC_HPP

#include <vector>

#include "sg/graph.hpp"
#include "sg/intpoly.hpp"

namespace sg {

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kMainAngleResidualTol = 1e-6;

/// Eigenvalues of the selected matrix, descending, within tol of the true
/// values (cyclic Jacobi at extended precision, so the contract holds
/// with a wide margin for n <= 64).
std::vector<double> numeric_spectrum(const Graph& g, MatrixKind kind,
                                     double tol = kDefaultTol);

/// Main-angle data of the adjacency matrix: distinct eigenvalues mu_i
/// (descending; the count matches the exact distinct-root count of the
/// characteristic polynomial) and alpha_sq[i][j], the squared norm of the
/// projection of basis vector j onto the mu_i eigenspace.
struct MainAngles {
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> alpha_sq; // [distinct eigenvalue][vertex]
    bool ill_conditioned = false; // some eigenvalue gap below 10*tol
};

MainAngles main_angles(const Graph& g, double tol = kDefaultTol);

/// max over xs of |P_{G-j}(x) - P_G(x) * sum_i alpha_sq[i][j]/(x - mu_i)|.
/// The left side is exact; the right side is evaluated at extended
/// precision through the resolvent, which equals the main-angle sum.
/// Sample points closer than 10*tol to an eigenvalue are rejected.
double vertex_deleted_identity_residual(const Graph& g, int j,
                                        const std::vector<double>& xs,
                                        double tol = kDefaultTol);

namespace detail {

/// Dense symmetric eigensolver (cyclic Jacobi, long double).
/// Returns eigenvalues descending; vectors[k] is the eigenvector for
/// eigenvalues[k] when vectors != nullptr.
void jacobi_eigen(int n, const std::vector<long double>& matrix,
                  std::vector<long double>& eigenvalues,
                  std::vector<std::vector<long double>>* vectors);

std::vector<long double> matrix_of(const Graph& g, MatrixKind kind);

} // namespace detail

} // namespace sg

#endif
