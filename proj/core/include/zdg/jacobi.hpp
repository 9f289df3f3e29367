#pragma once

// Cyclic-by-row Jacobi eigensolver for dense real symmetric matrices.
// Self-contained: no external linear-algebra dependency.

#include <cstddef>
#include <span>
#include <vector>

namespace zdg {

// Convergence: off-diagonal Frobenius norm <= tol * Frobenius norm of the
// input. The default is tight enough that downstream checks at 1e-8..1e-9
// are limited by the mathematics, not the solver.
constexpr double kDefaultJacobiTol = 1e-13;
constexpr int kMaxJacobiSweeps = 100;

// Eigenvalues of a symmetric order x order matrix (row-major), ascending.
//
// Throws domain_error if the buffer size does not match or the matrix is
// not symmetric (tolerance 1e-12 on |a_ij - a_ji|), and convergence_error
// if the sweep budget is exhausted before reaching tol (does not happen
// for real symmetric input; the budget is a hard safety stop).
std::vector<double> jacobi_eigenvalues(std::span<const double> matrix,
                                       std::size_t order,
                                       double tol = kDefaultJacobiTol);

} // namespace zdg
