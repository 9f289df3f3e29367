#pragma once

// Spectra and energy of zero-divisor graphs, with two evaluation paths:
// a full dense eigensolve and an exact reduction to a k x k matrix over
// the divisor classes (the class partition is equitable, and same-class
// vertices are twins, so the nonzero spectrum lives on the classes).

#include "zdg/adjacency.hpp"
#include "zdg/class_structure.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace zdg {

// Relative threshold separating "numerically zero" eigenvalues from the
// nonzero spectrum: |lambda| <= factor * max(1, max_i |lambda_i|).
constexpr double kZeroThresholdFactor = 1e-7;

// The k x k symmetric matrix whose eigenvalues are the nonzero part of
// the graph spectrum. With s_i the class sizes:
//   off-diagonal (i, j): sqrt(s_i * s_j) if the classes are joined, else 0
//   diagonal     (i, i): paper_loops: s_i if class i is looped, else 0
//                        simple:      s_i - 1 if looped, else 0
// Under paper_loops the reduction is exact as stated. Under simple, each
// looped class of size s additionally contributes the eigenvalue -1 with
// multiplicity s - 1 (clique minus its loops); spectrum() accounts for
// that, see Spectrum::appended_minus_ones.
struct ReducedClassMatrix {
    std::size_t order = 0;
    std::vector<double> entries; // row-major, order x order
    std::vector<std::size_t> class_sizes;

    double at(std::size_t i, std::size_t j) const {
        return entries[i * order + j];
    }
};

ReducedClassMatrix reduced_class_matrix(const ClassStructure& cs,
                                        Convention convention);

enum class SpectrumSource {
    full_dense,    // Jacobi on the order-N adjacency matrix
    class_reduced, // Jacobi on the k x k reduced matrix
};

const char* to_string(SpectrumSource source);

struct Spectrum {
    std::vector<double> nonzero;       // descending
    std::size_t zero_multiplicity = 0; // graph order minus nonzero count
    double energy = 0.0;               // sum of |lambda| over nonzero
    SpectrumSource source = SpectrumSource::class_reduced;
    // simple convention + class_reduced only: count of exact -1 eigenvalues
    // appended for clique classes (included in nonzero and energy).
    std::size_t appended_minus_ones = 0;
};

// Spectrum of the zero-divisor graph of cs.modulus under the given
// convention. full_dense is subject to dense_cap; class_reduced is not.
Spectrum spectrum(const ClassStructure& cs, Convention convention,
                  SpectrumSource source,
                  std::size_t dense_cap = kDefaultDenseCap);

// Closed-form nonzero eigenvalues of the graph of Z_{p^3} (paper_loops):
//   (p - 1)(1 +- sqrt(1 + 4p)) / 2,
// returned (larger, smaller); the remaining p^2 - 3 eigenvalues are 0.
// Throws domain_error unless p is prime.
std::pair<double, double> closed_eigenvalues_p3(std::uint64_t p);

// Closed-form graph energy of Z_{p^3} (paper_loops):
//   (p - 1) sqrt(1 + 4p).
double energy_closed_p3(std::uint64_t p);

// The quartic annihilating the four nonzero eigenvalues of the graph of
// Z_{p^2 q} (paper_loops) exists in two published versions that differ
// only in the lambda^2 coefficient.
enum class QuarticVariant {
    proof_derivation,     // c2 = -2p(p-1)(q-1); follows from the derivation
    statement_as_printed, // c2 = -2p(q-1)^2(p-1); the displayed statement
};

const char* to_string(QuarticVariant variant);

struct QuarticCoefficients {
    // P(lambda) = c4 l^4 + c3 l^3 + c2 l^2 + c1 l + c0, c4 = 1.
    double c4 = 1.0, c3 = 0.0, c2 = 0.0, c1 = 0.0, c0 = 0.0;
    QuarticVariant variant = QuarticVariant::proof_derivation;

    double eval(double lambda) const;
    // Scale for relative residuals: sum_i |c_i| * |lambda|^i.
    double scale_at(double lambda) const;
};

// Coefficients for Z_{p^2 q}; p, q must be distinct primes.
QuarticCoefficients quartic_p2q(std::uint64_t p, std::uint64_t q,
                                QuarticVariant variant);

struct QuarticVerdict {
    bool match = false;                // 4 nonzero eigenvalues, all residuals <= tol
    double max_relative_residual = 0.0;
    std::size_t nonzero_count = 0;
};

// Compute the full dense spectrum of Z_{p^2 q} under paper_loops and test
// the quartic against every nonzero eigenvalue with relative residual
// |P(lambda)| / scale_at(lambda) <= tol.
QuarticVerdict verify_quartic(std::uint64_t p, std::uint64_t q,
                              QuarticVariant variant, double tol = 1e-6,
                              std::size_t dense_cap = kDefaultDenseCap);

} // namespace zdg
