#include "zdg/jacobi.hpp"

#include "zdg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace zdg {

namespace {

double off_diagonal_frobenius(const std::vector<double>& a, std::size_t n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = a[i * n + j];
            sum += 2.0 * v * v;
        }
    }
    return std::sqrt(sum);
}

} // namespace

std::vector<double> jacobi_eigenvalues(std::span<const double> matrix,
                                       std::size_t order, double tol) {
    const std::size_t n = order;
    if (matrix.size() != n * n) {
        throw domain_error("jacobi_eigenvalues: buffer holds " +
                           std::to_string(matrix.size()) +
                           " entries, expected " + std::to_string(n * n));
    }
    if (n == 0) return {};

    constexpr double kSymmetryTol = 1e-12;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(matrix[i * n + j] - matrix[j * n + i]) > kSymmetryTol) {
                throw domain_error("jacobi_eigenvalues: input is not symmetric "
                                   "at (" + std::to_string(i) + ", " +
                                   std::to_string(j) + ")");
            }
        }
    }

    std::vector<double> a(matrix.begin(), matrix.end());
    if (n == 1) return {a[0]};

    double frobenius = 0.0;
    for (double v : a) frobenius += v * v;
    frobenius = std::sqrt(frobenius);
    if (frobenius == 0.0) {
        return std::vector<double>(n, 0.0);
    }
    const double target = tol * frobenius;

    for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
        if (off_diagonal_frobenius(a, n) <= target) {
            std::vector<double> eigenvalues(n);
            for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = a[i * n + i];
            std::sort(eigenvalues.begin(), eigenvalues.end());
            return eigenvalues;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];

                // Rotation angle chosen to zero a_pq (Golub & Van Loan,
                // symmetric Schur decomposition), using the stable form
                // of the tangent.
                const double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                // Rotate rows/columns p and q, keeping a symmetric;
                // classic update a'_rp = a_rp - s*(a_rq + tau*a_rp).
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a[r * n + p];
                    const double arq = a[r * n + q];
                    const double new_rp = arp - s * (arq + tau * arp);
                    const double new_rq = arq + s * (arp - tau * arq);
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
            }
        }
    }

    if (off_diagonal_frobenius(a, n) <= target) {
        std::vector<double> eigenvalues(n);
        for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = a[i * n + i];
        std::sort(eigenvalues.begin(), eigenvalues.end());
        return eigenvalues;
    }
    throw convergence_error("jacobi_eigenvalues: no convergence to tolerance " +
                            std::to_string(tol) + " within " +
                            std::to_string(kMaxJacobiSweeps) + " sweeps");
}

} // namespace zdg
