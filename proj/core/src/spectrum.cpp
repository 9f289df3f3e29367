#include "zdg/spectrum.hpp"

#include "zdg/errors.hpp"
#include "zdg/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace zdg {

namespace {

// Split a full eigenvalue list (ascending) into the nonzero spectrum
// (descending) and the zero multiplicity, using the relative threshold.
void split_by_threshold(const std::vector<double>& eigenvalues,
                        std::vector<double>& nonzero) {
    double max_abs = 0.0;
    for (double v : eigenvalues) max_abs = std::max(max_abs, std::abs(v));
    const double threshold = kZeroThresholdFactor * std::max(1.0, max_abs);
    nonzero.clear();
    for (double v : eigenvalues) {
        if (std::abs(v) > threshold) nonzero.push_back(v);
    }
    std::sort(nonzero.begin(), nonzero.end(), std::greater<>());
}

void require_prime(std::uint64_t p, const char* where) {
    if (!is_prime(p)) {
        throw domain_error(std::string(where) + ": " + std::to_string(p) +
                           " is not prime");
    }
}

} // namespace

const char* to_string(SpectrumSource source) {
    switch (source) {
    case SpectrumSource::full_dense: return "full-dense";
    case SpectrumSource::class_reduced: return "class-reduced";
    }
    return "class-reduced";
}

const char* to_string(QuarticVariant variant) {
    switch (variant) {
    case QuarticVariant::proof_derivation: return "proof";
    case QuarticVariant::statement_as_printed: return "statement";
    }
    return "proof";
}

ReducedClassMatrix reduced_class_matrix(const ClassStructure& cs,
                                        Convention convention) {
    const std::size_t k = cs.classes.size();
    ReducedClassMatrix reduced;
    reduced.order = k;
    reduced.entries.assign(k * k, 0.0);
    reduced.class_sizes.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        reduced.class_sizes[i] = cs.classes[i].size();
    }
    for (std::size_t i = 0; i < k; ++i) {
        const double si = static_cast<double>(reduced.class_sizes[i]);
        if (cs.classes[i].looped) {
            reduced.entries[i * k + i] =
                convention == Convention::paper_loops ? si : si - 1.0;
        }
        for (std::size_t j = i + 1; j < k; ++j) {
            const bool joined = mul_mod(cs.classes[i].divisor,
                                        cs.classes[j].divisor,
                                        cs.modulus.n) == 0;
            if (!joined) continue;
            const double sj = static_cast<double>(reduced.class_sizes[j]);
            const double value = std::sqrt(si * sj);
            reduced.entries[i * k + j] = value;
            reduced.entries[j * k + i] = value;
        }
    }
    return reduced;
}

Spectrum spectrum(const ClassStructure& cs, Convention convention,
                  SpectrumSource source, std::size_t dense_cap) {
    Spectrum result;
    result.source = source;

    if (source == SpectrumSource::full_dense) {
        const AdjacencyMatrix matrix =
            build_adjacency(cs, convention, dense_cap);
        std::vector<double> dense(matrix.order * matrix.order);
        for (std::size_t i = 0; i < dense.size(); ++i) {
            dense[i] = static_cast<double>(matrix.entries[i]);
        }
        const std::vector<double> eigenvalues =
            jacobi_eigenvalues(dense, matrix.order);
        split_by_threshold(eigenvalues, result.nonzero);
    } else {
        const ReducedClassMatrix reduced =
            reduced_class_matrix(cs, convention);
        const std::vector<double> eigenvalues =
            jacobi_eigenvalues(reduced.entries, reduced.order);
        split_by_threshold(eigenvalues, result.nonzero);
        if (convention == Convention::simple) {
            // A looped class is a clique K_s in the simple graph; its s - 1
            // within-class difference vectors are eigenvectors at -1 and are
            // invisible to the class-level reduction.
            std::size_t extra = 0;
            for (const auto& cls : cs.classes) {
                if (cls.looped) extra += cls.size() - 1;
            }
            result.appended_minus_ones = extra;
            result.nonzero.insert(result.nonzero.end(), extra, -1.0);
            std::sort(result.nonzero.begin(), result.nonzero.end(),
                      std::greater<>());
        }
    }

    result.zero_multiplicity =
        static_cast<std::size_t>(cs.total_vertices) - result.nonzero.size();
    result.energy = 0.0;
    for (double v : result.nonzero) result.energy += std::abs(v);
    return result;
}

std::pair<double, double> closed_eigenvalues_p3(std::uint64_t p) {
    require_prime(p, "closed_eigenvalues_p3");
    const double pd = static_cast<double>(p);
    const double root = std::sqrt(1.0 + 4.0 * pd);
    return {(pd - 1.0) * (1.0 + root) / 2.0, (pd - 1.0) * (1.0 - root) / 2.0};
}

double energy_closed_p3(std::uint64_t p) {
    require_prime(p, "energy_closed_p3");
    const double pd = static_cast<double>(p);
    return (pd - 1.0) * std::sqrt(1.0 + 4.0 * pd);
}

double QuarticCoefficients::eval(double lambda) const {
    // Horner evaluation.
    return (((c4 * lambda + c3) * lambda + c2) * lambda + c1) * lambda + c0;
}

double QuarticCoefficients::scale_at(double lambda) const {
    const double x = std::abs(lambda);
    return (((std::abs(c4) * x + std::abs(c3)) * x + std::abs(c2)) * x +
            std::abs(c1)) * x + std::abs(c0);
}

QuarticCoefficients quartic_p2q(std::uint64_t p, std::uint64_t q,
                                QuarticVariant variant) {
    require_prime(p, "quartic_p2q");
    require_prime(q, "quartic_p2q");
    if (p == q) {
        throw domain_error("quartic_p2q: p and q must be distinct, got " +
                           std::to_string(p));
    }
    const double pd = static_cast<double>(p);
    const double qd = static_cast<double>(q);
    QuarticCoefficients c;
    c.variant = variant;
    c.c4 = 1.0;
    c.c3 = -(pd - 1.0);
    c.c2 = variant == QuarticVariant::proof_derivation
               ? -2.0 * pd * (pd - 1.0) * (qd - 1.0)
               : -2.0 * pd * (qd - 1.0) * (qd - 1.0) * (pd - 1.0);
    c.c1 = pd * (pd - 1.0) * (pd - 1.0) * (qd - 1.0);
    c.c0 = pd * (pd - 1.0) * (pd - 1.0) * (pd - 1.0) * (qd - 1.0) * (qd - 1.0);
    return c;
}

QuarticVerdict verify_quartic(std::uint64_t p, std::uint64_t q,
                              QuarticVariant variant, double tol,
                              std::size_t dense_cap) {
    const QuarticCoefficients coefficients = quartic_p2q(p, q, variant);
    const unsigned __int128 wide =
        static_cast<unsigned __int128>(p) * p * q;
    if (wide > ~0ULL) {
        throw overflow_error("verify_quartic: p^2 q exceeds 64 bits");
    }
    const std::uint64_t n = static_cast<std::uint64_t>(wide);
    const ClassStructure cs = class_partition(factorize(n));
    const Spectrum spec = spectrum(cs, Convention::paper_loops,
                                   SpectrumSource::full_dense, dense_cap);

    QuarticVerdict verdict;
    verdict.nonzero_count = spec.nonzero.size();
    for (double lambda : spec.nonzero) {
        const double residual =
            std::abs(coefficients.eval(lambda)) / coefficients.scale_at(lambda);
        verdict.max_relative_residual =
            std::max(verdict.max_relative_residual, residual);
    }
    verdict.match = verdict.nonzero_count == 4 &&
                    verdict.max_relative_residual <= tol;
    return verdict;
}

} // namespace zdg
