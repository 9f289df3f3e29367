#pragma once

// Single-modulus analysis: structure, spectrum, Wiener data, and the
// verdicts of every applicable closed-form formula, with deterministic
// text and JSON rendering.

#include "zdg/adjacency.hpp"
#include "zdg/class_structure.hpp"
#include "zdg/spectrum.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zdg {

// Tolerances used by analyze(); see AnalyzeOptions for the knobs.
constexpr double kDefaultClosedFormTol = 1e-9;
constexpr double kDefaultQuarticTol = 1e-6;
// Spectral identity budgets, scaled by graph order N:
//   |sum(lambda) - trace|    <= kIdentityTol * N
//   |sum(lambda^2) - #ones|  <= kIdentityTol * N^2
// and the reduction cross-check max |lambda_reduced - lambda_dense| <=
// kReductionTol.
constexpr double kIdentityTol = 1e-8;
constexpr double kReductionTol = 1e-8;

enum class Verdict {
    match,
    mismatch,
    unchecked, // formula has a value but nothing to compare against
};

const char* to_string(Verdict verdict);

// A closed-form check against the computed spectrum.
struct SpectralFormCheck {
    std::string formula_id;
    std::vector<double> values; // eigenvalue pair / energy / coefficients
    double max_residual = 0.0;
    int nonzero_count = -1; // quartic checks: observed count, else -1
    Verdict verdict = Verdict::unchecked;
};

// A closed-form integer (Wiener) check against brute force.
struct WienerFormCheck {
    std::string formula_id;
    std::int64_t value = 0;
    Verdict verdict = Verdict::unchecked;
};

struct ClassSummary {
    std::uint64_t divisor = 0;
    std::uint64_t size = 0;
    bool looped = false;
};

struct StageTiming {
    std::string stage;
    double milliseconds = 0.0;
};

struct AnalyzeOptions {
    Convention convention = Convention::paper_loops;
    std::size_t dense_cap = kDefaultDenseCap;
    double closed_form_tol = kDefaultClosedFormTol;
    double quartic_tol = kDefaultQuarticTol;
    bool collect_timings = true;
};

struct AnalysisReport {
    FactoredModulus modulus;
    Convention convention = Convention::paper_loops;
    std::uint64_t vertices = 0;
    std::vector<ClassSummary> classes;

    // Dense-path results; absent when vertices > dense_cap.
    std::optional<bool> block_form;
    std::optional<double> reduction_max_diff;
    std::optional<double> trace_residual;
    std::optional<double> frobenius_residual;
    std::optional<bool> class_table_uniform;
    std::optional<std::int64_t> wiener_brute;
    std::optional<std::int32_t> diameter;

    Spectrum spec; // class-reduced, always present

    std::vector<SpectralFormCheck> spectral_forms;
    std::vector<WienerFormCheck> wiener_forms;

    std::vector<StageTiming> timings;

    // Any applicable formula check came out mismatch (drives exit code 2).
    bool any_mismatch() const;
    // All structural invariants that could be evaluated held: block form,
    // reduction agreement, trace/Frobenius identities, class-table
    // uniformity, and no mismatch on derivation-backed formulas
    // (thm4.1, thm4.2, thm4.3-proof, thm5.1, class-table).
    bool structural_ok() const;
};

// Full analysis of Z_n. Throws empty_graph_error when the graph is empty
// and domain_error for n < 2; other errors per the underlying stages.
AnalysisReport analyze(std::uint64_t n, const AnalyzeOptions& options = {});

// Human-readable multi-line rendering.
std::string render_text(const AnalysisReport& report, bool with_timings = true);

// Single-line JSON rendering; byte-deterministic given the same report
// fields (timings are the only nondeterministic field and are dropped
// when with_timings is false).
std::string render_json(const AnalysisReport& report, bool with_timings = true);

} // namespace zdg
